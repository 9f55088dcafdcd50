// suzuki-ds: construct, verify and search central (partial) difference sets
// in A_p(m, theta).  Exit codes: 0 pass, 1 check failed, 2 usage or
// precondition error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "suzuki/io.hpp"
#include "suzuki/parallel.hpp"

using namespace suzuki;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string field;
  std::string kind;
  std::string t, z;
  std::string variants = "all-ker";
  std::string out, report, csv;
  std::string in;
  std::string method = "both";
  std::string params;
  std::string b_choice = "ker";
  std::string j0, j1;
  std::string q_reading = "plus-one";
  std::string f2_reading = "relative-trace";
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  bool no_timing = false;
  bool pretty = false;
  bool validate = true;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep))
    if (!part.empty()) out.push_back(part);
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& s, std::size_t count) {
  std::vector<std::int64_t> out;
  for (const auto& p : split(s, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != p.size()) throw Error(Errc::ParseError, "bad integer '" + p + "'");
    out.push_back(v);
  }
  if (out.size() != count) throw Error(Errc::ParseError, "expected " + std::to_string(count) + " comma-separated integers");
  return out;
}

json run_config(const std::string& sub, const Options& o) {
  json j{{"subcommand", sub}};
  if (!o.kind.empty()) j["kind"] = o.kind;
  if (!o.field.empty()) j["field"] = o.field;
  if (!o.t.empty()) j["t"] = o.t;
  if (!o.z.empty()) j["z"] = o.z;
  if (sub == "construct") j["variants"] = o.variants;
  if (sub == "construct" && o.kind == "example-mf") {
    j["b"] = o.b_choice;
    j["j0"] = o.j0;
    j["j1"] = o.j1;
  }
  if (sub == "verify") {
    j["in"] = o.in;
    j["method"] = o.method;
  }
  if (!o.params.empty()) j["params"] = o.params;
  if (sub == "chartable") {
    j["q_reading"] = o.q_reading;
    j["f2_reading"] = o.f2_reading;
  }
  j["seed"] = o.seed;
  if (!o.out.empty()) j["out"] = o.out;
  if (!o.report.empty()) j["report"] = o.report;
  // thread count does not change results; it is kept with the timing fields
  if (!o.no_timing) j["threads"] = resolve_threads(o.threads);
  return j;
}

void emit(const json& doc, const Options& o, const std::string& summary) {
  if (!o.report.empty()) write_json_file(o.report, doc);
  if (o.pretty) std::cout << summary;
  else if (o.report.empty()) std::cout << doc.dump(2) << '\n';
}

std::string params_line(const VerifyReport& r) {
  std::ostringstream os;
  if (r.ds) os << "  (v,k,lambda,n) = (" << r.ds->v << "," << r.ds->k << "," << r.ds->lambda << "," << r.ds->n << ")\n";
  if (r.pds)
    os << "  (v,k,lambda,mu) = (" << r.pds->v << "," << r.pds->k << "," << r.pds->lambda << "," << r.pds->mu << ")\n";
  if (r.latin_epsilon) os << "  Latin square type, epsilon = " << *r.latin_epsilon << "\n";
  if (r.linking) os << "  (mu - eta, eta) = (" << r.linking->mu - r.linking->eta << "," << r.linking->eta << "), l = " << r.linking->l << "\n";
  return os.str();
}

std::string report_summary(const VerifyReport& r) {
  std::ostringstream os;
  os << r.check << " [" << r.method << "]: " << (r.result ? "PASS" : "FAIL") << (r.trivial ? " (trivial)" : "")
     << (r.degenerate ? " (degenerate)" : "") << "\n"
     << params_line(r);
  for (const auto& w : r.witnesses) os << "  " << w.kind << ": " << w.detail << "\n";
  if (r.witness_total > r.witnesses.size()) os << "  ... " << r.witness_total - r.witnesses.size() << " more\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

// ---- field-info -----------------------------------------------------------------

int cmd_field_info(const Options& o) {
  const FieldPtr F = Field::parse(o.field);
  const Group G(F);
  json j{{"tool", kToolVersion}, {"run_config", run_config("field-info", o)}};
  json info{{"spec", F->spec()},      {"p", F->p()},         {"m", F->m()},
            {"l", F->l()},            {"e", F->e()},         {"f", F->f()},
            {"order", F->order()},    {"sub_order", F->sub_order()},
            {"modulus", F->modulus()}, {"gamma", element_json(*F, F->gamma())},
            {"group_order", G.order()}, {"class_count", G.class_count()},
            {"generic_class_size", G.generic_class_size()}};
  try {
    const CharacterTable T(F);
    info["table"] = table_kind_name(T.kind());
    info["listed_characters"] = T.count();
    info["omitted_characters"] = T.omitted_count();
  } catch (const Error& e) {
    info["table"] = nullptr;
    info["table_error"] = e.what();
  }
  j["field"] = info;
  std::ostringstream os;
  os << "GF(" << F->p() << "^" << F->m() << "), theta = x^(" << F->p() << "^" << F->l() << "), e = " << F->e()
     << ", f = " << F->f() << "\n  modulus " << F->spec() << "\n  |G| = " << G.order() << ", " << G.class_count()
     << " classes\n";
  emit(j, o, os.str());
  return kPass;
}

// ---- chartable ---------------------------------------------------------------------

int cmd_chartable(const Options& o) {
  const FieldPtr F = Field::parse(o.field);
  TableOptions topt;
  if (o.q_reading == "plus-one") topt.q_reading = QReading::PlusOne;
  else if (o.q_reading == "doubled") topt.q_reading = QReading::Doubled;
  else throw Error(Errc::ParseError, "--q-reading is plus-one or doubled");
  if (o.f2_reading == "relative-trace") topt.f2_reading = LinearF2Reading::RelativeTrace;
  else if (o.f2_reading == "embedded") topt.f2_reading = LinearF2Reading::Embedded;
  else throw Error(Errc::ParseError, "--f2-reading is relative-trace or embedded");
  const CharacterTable T(F, topt);
  if (!o.csv.empty()) {
    std::ofstream out(o.csv);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + o.csv);
    write_table_csv(out, T);
  }
  json j{{"tool", kToolVersion}, {"run_config", run_config("chartable", o)}};
  bool ok = true;
  if (o.validate) {
    const TableValidation v = validate_table(T, o.threads);
    j["validation"] = validation_json(v);
    ok = v.ok();
  }
  if (o.csv.empty() && o.report.empty() && !o.pretty) {
    write_table_csv(std::cout, T);
    if (o.validate) std::cerr << j.dump(2) << '\n';
    return ok ? kPass : kFail;
  }
  std::ostringstream os;
  os << "character table " << table_kind_name(T.kind()) << ": " << T.count() << " listed";
  if (T.omitted_count()) os << ", " << T.omitted_count() << " omitted of degree " << T.omitted_degree();
  os << "\n";
  if (o.validate) os << "  validation " << (ok ? "PASS" : "FAIL") << "\n";
  emit(j, o, os.str());
  return ok ? kPass : kFail;
}

// ---- construct -----------------------------------------------------------------------

VariantSpec variants_of(const Options& o, const Field& F) {
  if (o.variants.rfind("file:", 0) == 0) return variant_from_json(read_json_file(o.variants.substr(5)), F.order());
  return VariantSpec::parse(o.variants, F.order());
}

std::vector<FieldElement> element_list(const Field& F, const std::string& s) {
  std::vector<FieldElement> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_element(F, p));
  return out;
}

Choice choice_of(const std::string& s) {
  if (s == "ker") return Choice::Ker;
  if (s == "comp") return Choice::Comp;
  throw Error(Errc::ParseError, "choice is ker or comp");
}

std::vector<LinkSpec> link_specs(const Options& o, const Field& F) {
  // all-ker, all-comp, or seed:<n> drawing (B, Gamma) per z with one draw each
  if (o.variants == "all-ker") return {};
  if (o.variants == "all-comp") return {LinkSpec{Choice::Comp, Choice::Comp}};
  const VariantSpec v = VariantSpec::parse(o.variants, F.sub_order() * 2);
  std::vector<LinkSpec> out;
  for (std::uint32_t z = 1; z < F.sub_order(); ++z)
    out.push_back({v.gamma_at(FieldElement{2 * z - 1}), v.gamma_at(FieldElement{2 * z})});
  return out;
}

json family_json(const LinkingFamily& fam) {
  json members = json::array(), thirds = json::array();
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    json m = set_json(fam.sets[i]);
    m["z"] = subfield_json(*fam.field, fam.zs[i]);
    m["eta"] = fam.specs[i].eta();
    m["eps"] = fam.specs[i].eps();
    members.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < fam.sets.size(); ++i)
    for (std::size_t j = 0; j < fam.sets.size(); ++j) {
      if (i == j) continue;
      const ThirdSet th = fam.third_spec(i, j);
      json t = set_json(fam.member(th.z, th.spec));
      t["i"] = i;
      t["j"] = j;
      t["z"] = subfield_json(*fam.field, th.z);
      t["eta"] = th.spec.eta();
      t["eps"] = th.spec.eps();
      thirds.push_back(std::move(t));
    }
  json j{{"field", fam.field->spec()}, {"degenerate", fam.degenerate}, {"family", std::move(members)},
         {"thirds", std::move(thirds)}};
  if (fam.t) j["t"] = element_json(*fam.field, *fam.t);
  return j;
}

int cmd_construct(const Options& o) {
  const FieldPtr F = Field::parse(o.field);
  const Field& f = *F;
  auto need_t = [&]() {
    if (o.t.empty()) throw Error(Errc::InvalidArgument, "--t is required for " + o.kind);
    return parse_element(f, o.t);
  };
  auto opt_t = [&]() -> std::optional<FieldElement> {
    if (o.t.empty()) return std::nullopt;
    return parse_element(f, o.t);
  };
  auto z_or = [&](std::uint32_t dflt) { return o.z.empty() ? f.sub_element(dflt) : parse_subfield_element(f, o.z); };
  auto opt_z = [&]() -> std::optional<SubfieldElement> {
    if (o.z.empty()) return std::nullopt;
    return parse_subfield_element(f, o.z);
  };

  json doc;
  std::string summary;
  if (o.kind == "linking-rt" || o.kind == "linking-r") {
    const auto specs = link_specs(o, f);
    const LinkingFamily fam = o.kind == "linking-rt" ? build_linking_Rt(F, need_t(), specs) : build_linking_R(F, specs);
    doc = family_json(fam);
    summary = "linking family of " + std::to_string(fam.sets.size()) + " sets" + (fam.degenerate ? " (degenerate)" : "") + "\n";
  } else if (o.kind == "dillon") {
    const Group G(F);
    const auto D = build_dillon(G, dillon_spec_seeded(F, o.seed));
    doc = elements_json(f, D);
    summary = "Dillon set with " + std::to_string(D.size()) + " elements\n";
  } else {
    CentralSet S(F);
    if (o.kind == "ds-tz") S = build_ds_tz(F, need_t(), z_or(1), variants_of(o, f));
    else if (o.kind == "ds-z") S = build_ds_z(F, z_or(1), variants_of(o, f));
    else if (o.kind == "pds-tz") S = build_pds_tz(F, need_t(), opt_z());
    else if (o.kind == "pds-z") S = build_pds_z(F, opt_z());
    else if (o.kind == "pds-zprime") S = build_pds_z_prime(F, opt_z());
    else if (o.kind == "pds-zdprime") S = build_pds_z_dprime(F, opt_z());
    else if (o.kind == "example-mf") S = build_example_mf(F, opt_t(), choice_of(o.b_choice), element_list(f, o.j0), element_list(f, o.j1));
    else throw Error(Errc::InvalidArgument, "unknown construction '" + o.kind + "'");
    doc = set_json(S);
    summary = o.kind + ": " + std::to_string(S.cardinality()) + " elements in " + std::to_string(S.class_count()) + " classes\n";
  }
  doc["tool"] = kToolVersion;
  doc["run_config"] = run_config("construct", o);
  if (!o.out.empty()) write_json_file(o.out, doc);
  if (o.pretty) std::cout << summary;
  else if (o.out.empty()) std::cout << doc.dump(2) << '\n';
  return kPass;
}

// ---- verify ----------------------------------------------------------------------------

int cmd_verify(const Options& o) {
  const Method method = parse_method(o.method);
  const auto paths = split(o.in, ',');
  if (paths.empty()) throw Error(Errc::InvalidArgument, "--in needs at least one file");

  std::vector<json> docs;
  for (const auto& p : paths) docs.push_back(read_json_file(p));
  const FieldPtr F = Field::parse(docs.front().at("field").get<std::string>());
  const Group G(F);
  std::optional<CharacterTable> table;
  if (method != Method::GroupRing) table.emplace(F);
  const VerifyContext ctx{&G, table ? &*table : nullptr, o.threads};

  VerifyReport r;
  if (o.kind == "linking") {
    std::vector<CentralSet> family;
    std::map<std::pair<std::size_t, std::size_t>, CentralSet> thirds;
    for (const auto& d : docs) {
      if (d.contains("family")) {
        for (const auto& m : d.at("family")) family.push_back(*set_from_json(m, F).central);
        if (d.contains("thirds"))
          for (const auto& t : d.at("thirds"))
            thirds.emplace(std::make_pair(t.at("i").get<std::size_t>(), t.at("j").get<std::size_t>()),
                           *set_from_json(t, F).central);
      } else {
        SetFile s = set_from_json(d, F);
        if (!s.central) throw Error(Errc::InvalidArgument, "linking members must be class sets");
        family.push_back(std::move(*s.central));
      }
    }
    ThirdResolver resolver;
    if (!thirds.empty())
      resolver = [&thirds](std::size_t i, std::size_t j) -> std::optional<CentralSet> {
        auto it = thirds.find({i, j});
        if (it == thirds.end()) return std::nullopt;
        return it->second;
      };
    r = check_linking(ctx, family, resolver, method);
  } else {
    if (docs.size() != 1) throw Error(Errc::InvalidArgument, o.kind + " takes exactly one input file");
    SetFile s = set_from_json(docs.front(), F);
    if (o.kind == "ds") {
      r = s.central ? check_ds(ctx, *s.central, method) : check_ds_elements(ctx, s.elements, method);
    } else if (o.kind == "pds") {
      if (!s.central) {
        auto c = central_set_of(G, s.elements);
        if (!c && method == Method::GroupRing) {
          std::vector<std::uint64_t> idx;
          for (auto g : s.elements) idx.push_back(G.index(g));
          r = check_pds_groupring(view_of(G), idx, o.threads);
        } else if (!c) {
          throw Error(Errc::NonCentralSetForCharacterMethod, "the set is not a union of conjugacy classes");
        } else {
          s.central = std::move(c);
        }
      }
      if (s.central) r = check_pds(ctx, *s.central, method);
    } else {
      throw Error(Errc::InvalidArgument, "verify takes ds, pds or linking");
    }
  }
  if (!o.params.empty()) {
    if (o.kind == "pds") {
      const auto v = parse_ints(o.params, 4);
      const PDSParams want{v[0], v[1], v[2], v[3]};
      if (r.result && r.pds != want) {
        r.result = false;
        r.add_witness("parameter", "parameters differ from --params");
      }
    } else {
      const auto v = parse_ints(o.params, 4);
      const DSParams want{v[0], v[1], v[2], v[3]};
      if (r.result && r.ds != want) {
        r.result = false;
        r.add_witness("parameter", "parameters differ from --params");
      }
    }
  }
  json j{{"tool", kToolVersion}, {"run_config", run_config("verify", o)}, {"report", report_json(r, !o.no_timing)}};
  emit(j, o, report_summary(r));
  return r.result ? kPass : kFail;
}

// ---- search -------------------------------------------------------------------------------

int cmd_search(const Options& o) {
  const FieldPtr F = Field::parse(o.field);
  const Group G(F);
  const CharacterTable T(F);
  const VerifyContext ctx{&G, &T, o.threads};
  const auto v = parse_ints(o.params, 4);
  SearchResult res;
  if (o.kind == "ds") res = search_central_ds(ctx, DSParams{v[0], v[1], v[2], v[3]});
  else if (o.kind == "pds") res = search_central_pds(ctx, PDSParams{v[0], v[1], v[2], v[3]});
  else throw Error(Errc::InvalidArgument, "search takes ds or pds");
  json result = search_json(res, !o.no_timing);
  if (o.kind == "ds" && F->p() == 2 && F->e() == 1) {
    std::uint64_t ex4 = 0, ex5 = 0, unmatched = 0;
    for (const auto& S : res.sets) {
      const auto m = match_example_mf(S);
      if (!m) ++unmatched;
      else (m->example == 4 ? ex4 : ex5)++;
    }
    result["example_match"] = json{{"with_B", ex4}, {"without_B", ex5}, {"unmatched", unmatched}};
  }
  json j{{"tool", kToolVersion}, {"run_config", run_config("search", o)}, {"search", std::move(result)}};
  std::ostringstream os;
  os << "search " << o.kind << " " << o.params << " over " << G.class_count() << " classes: " << res.sets.size()
     << " sets (" << res.stats.nodes << " nodes, " << res.stats.leaves << " leaves)\n";
  emit(j, o, os.str());
  return kPass;
}

void common(CLI::App* sub, Options& o) {
  sub->add_option("--threads", o.threads, "worker threads (0 = available parallelism)");
  sub->add_flag("--no-timing", o.no_timing, "omit timing fields from reports");
  sub->add_flag("--pretty", o.pretty, "human-readable summary on stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central difference sets in Suzuki p-groups A_p(m, theta)", "suzuki-ds"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;

  auto* fi = app.add_subcommand("field-info", "field and group data");
  fi->add_option("--field", o.field, "p,m,l[,modulus]")->required();
  common(fi, o);

  auto* ct = app.add_subcommand("chartable", "character table as CSV plus validation JSON");
  ct->add_option("--field", o.field, "p,m,l[,modulus]")->required();
  ct->add_option("--csv", o.csv, "CSV output path (stdout when no output is given)");
  ct->add_option("--report", o.report, "validation report path");
  ct->add_option("--q-reading", o.q_reading, "plus-one | doubled");
  ct->add_option("--f2-reading", o.f2_reading, "relative-trace | embedded");
  ct->add_flag("!--no-validate", o.validate, "skip validation");
  common(ct, o);

  auto* cs = app.add_subcommand("construct", "build a set or a linking family");
  cs->add_option("kind", o.kind, "construction")
      ->required()
      ->check(CLI::IsMember({"ds-tz", "ds-z", "linking-rt", "linking-r", "pds-tz", "pds-z", "pds-zprime", "pds-zdprime",
                             "dillon", "example-mf"}));
  cs->add_option("--field", o.field, "p,m,l[,modulus]")->required();
  cs->add_option("--t", o.t, "t as index or c0:c1:...");
  cs->add_option("--z", o.z, "z in F_{p^e} as index or c0:c1:...");
  cs->add_option("--variants", o.variants, "all-ker | all-comp | seed:<n> | file:<path>");
  cs->add_option("--b", o.b_choice, "example-mf: ker | comp");
  cs->add_option("--j0", o.j0, "example-mf: comma-separated elements with Gamma(a) = {0}");
  cs->add_option("--j1", o.j1, "example-mf: comma-separated elements with Gamma(a) = {1}");
  cs->add_option("--seed", o.seed, "seed for dillon");
  cs->add_option("--out", o.out, "output set file");
  common(cs, o);

  auto* vf = app.add_subcommand("verify", "check a set or linking family");
  vf->add_option("kind", o.kind, "ds | pds | linking")->required()->check(CLI::IsMember({"ds", "pds", "linking"}));
  vf->add_option("--in", o.in, "set file(s), comma-separated")->required();
  vf->add_option("--method", o.method, "groupring | character | both")
      ->check(CLI::IsMember({"groupring", "character", "both"}));
  vf->add_option("--params", o.params, "expected v,k,lambda,n (ds) or v,k,lambda,mu (pds)");
  vf->add_option("--report", o.report, "report path");
  common(vf, o);

  auto* sr = app.add_subcommand("search", "exhaustive search for central sets");
  sr->add_option("kind", o.kind, "ds | pds")->required()->check(CLI::IsMember({"ds", "pds"}));
  sr->add_option("--field", o.field, "p,m,l[,modulus]")->required();
  sr->add_option("--params", o.params, "v,k,lambda,n (ds) or v,k,lambda,mu (pds)")->required();
  sr->add_option("--report", o.report, "report path");
  common(sr, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (fi->parsed()) return cmd_field_info(o);
    if (ct->parsed()) return cmd_chartable(o);
    if (cs->parsed()) return cmd_construct(o);
    if (vf->parsed()) return cmd_verify(o);
    if (sr->parsed()) return cmd_search(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

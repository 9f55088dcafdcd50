#include "suzuki/io.hpp"

#include <fstream>
#include <sstream>

namespace suzuki {

namespace {

std::vector<std::uint32_t> parse_coeff_text(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, "bad coefficient list '" + text + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  return out;
}

std::vector<std::uint32_t> coeffs_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected a coefficient list");
  std::vector<std::uint32_t> out;
  for (const auto& c : j) {
    if (!c.is_number_unsigned()) throw Error(Errc::ParseError, "coefficients must be non-negative integers");
    out.push_back(c.get<std::uint32_t>());
  }
  return out;
}

SubfieldElement sub_from_coeffs(const Field& F, const std::vector<std::uint32_t>& c) {
  if (c.size() > F.e()) throw Error(Errc::ParseError, "too many subfield coefficients");
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= F.p()) throw Error(Errc::ParseError, "coefficient out of range");
    idx = idx * F.p() + c[i];
  }
  return F.sub_element(idx);
}

}  // namespace

FieldElement parse_element(const Field& F, const std::string& text) {
  if (text.find(':') == std::string::npos) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, "bad field element '" + text + "'");
    return F.element(static_cast<std::uint32_t>(std::stoul(text)));
  }
  return F.from_coeffs(parse_coeff_text(text));
}

SubfieldElement parse_subfield_element(const Field& F, const std::string& text) {
  if (text.find(':') == std::string::npos) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, "bad subfield element '" + text + "'");
    return F.sub_element(static_cast<std::uint32_t>(std::stoul(text)));
  }
  return sub_from_coeffs(F, parse_coeff_text(text));
}

json element_json(const Field& F, FieldElement a) { return F.coeffs(a); }
json subfield_json(const Field& F, SubfieldElement u) { return F.sub_coeffs(u); }
FieldElement element_from_json(const Field& F, const json& j) { return F.from_coeffs(coeffs_from_json(j)); }
SubfieldElement subfield_from_json(const Field& F, const json& j) { return sub_from_coeffs(F, coeffs_from_json(j)); }

json class_json(const Field& F, ClassId c) {
  if (c.is_central()) return json{{"type", "central"}, {"b", element_json(F, c.b())}};
  return json{{"type", "generic"}, {"a", element_json(F, c.a)}, {"x", subfield_json(F, c.x())}};
}

ClassId class_from_json(const Field& F, const json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error(Errc::ParseError, "class entry needs a type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "central") return ClassId::central(element_from_json(F, j.at("b")));
  if (type == "generic") {
    const FieldElement a = element_from_json(F, j.at("a"));
    if (a.index == 0) throw Error(Errc::ParseError, "generic class needs a != 0");
    return ClassId::generic(a, subfield_from_json(F, j.at("x")));
  }
  throw Error(Errc::ParseError, "unknown class type '" + type + "'");
}

json group_element_json(const Field& F, GroupElement g) {
  return json{{"a", element_json(F, g.a)}, {"b", element_json(F, g.b)}};
}

json set_json(const CentralSet& S) {
  if (S.class_count() > kMaxFileClasses)
    throw Error(Errc::TooLarge, "set has " + std::to_string(S.class_count()) + " classes; files hold at most " +
                                    std::to_string(kMaxFileClasses));
  json classes = json::array();
  S.for_each_class([&](ClassId c) { classes.push_back(class_json(S.field(), c)); });
  return json{{"field", S.field().spec()}, {"cardinality", S.cardinality()}, {"classes", std::move(classes)}};
}

json elements_json(const Field& F, const std::vector<GroupElement>& D) {
  json el = json::array();
  for (auto g : D) el.push_back(group_element_json(F, g));
  return json{{"field", F.spec()}, {"cardinality", D.size()}, {"elements", std::move(el)}};
}

SetFile set_from_json(const json& j, const FieldPtr& reuse) {
  try {
    SetFile out;
    const std::string spec = j.at("field").get<std::string>();
    FieldPtr F = Field::parse(spec);
    if (reuse && reuse->same_as(*F)) F = reuse;
    out.field = F;
    if (j.contains("classes")) {
      CentralSet S(F);
      for (const auto& c : j.at("classes")) S.insert(class_from_json(*F, c));
      out.central = std::move(S);
    } else if (j.contains("elements")) {
      for (const auto& e : j.at("elements"))
        out.elements.push_back({element_from_json(*F, e.at("a")), element_from_json(*F, e.at("b"))});
    } else {
      throw Error(Errc::ParseError, "set file needs \"classes\" or \"elements\"");
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed set file: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

SetFile read_set_file(const std::string& path, const FieldPtr& reuse) { return set_from_json(read_json_file(path), reuse); }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

VariantSpec variant_from_json(const json& j, std::uint32_t field_order) {
  auto choice = [](const json& c) {
    const std::string s = c.get<std::string>();
    if (s == "ker") return Choice::Ker;
    if (s == "comp") return Choice::Comp;
    throw Error(Errc::ParseError, "variant choices are \"ker\" or \"comp\"");
  };
  try {
    VariantSpec v;
    if (j.contains("b")) v.b = choice(j.at("b"));
    if (j.contains("gamma")) {
      const json& g = j.at("gamma");
      if (g.is_string()) {
        v.gamma = {choice(g)};
      } else {
        if (g.size() != field_order - 1) throw Error(Errc::ParseError, "gamma list needs one entry per a in F^*");
        v.gamma.assign(field_order, Choice::Ker);
        for (std::uint32_t a = 1; a < field_order; ++a) v.gamma[a] = choice(g.at(a - 1));
      }
    }
    return v;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed variant file: ") + e.what());
  }
}

json cycint_json(const CycInt& x) { return json{{"n", x.conductor()}, {"coeffs", x.coeffs()}}; }

json ds_params_json(const DSParams& p) {
  return json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"n", p.n}};
}

json pds_params_json(const PDSParams& p) {
  return json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json report_json(const VerifyReport& r, bool timing) {
  json j{{"check", r.check}, {"method", r.method}, {"result", r.result}, {"trivial", r.trivial},
         {"degenerate", r.degenerate}};
  j["ds_params"] = r.ds ? ds_params_json(*r.ds) : json(nullptr);
  j["pds_params"] = r.pds ? pds_params_json(*r.pds) : json(nullptr);
  j["linking_params"] = r.linking ? json{{"mu", r.linking->mu}, {"eta", r.linking->eta}, {"l", r.linking->l}} : json(nullptr);
  j["latin_square_epsilon"] = r.latin_epsilon ? json(*r.latin_epsilon) : json(nullptr);
  j["checked"] = r.checked;
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"kind", x.kind}, {"detail", x.detail}});
  j["witnesses"] = std::move(w);
  j["witness_total"] = r.witness_total;
  j["notes"] = r.notes;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

json validation_json(const TableValidation& v) {
  return json{{"field", v.field},
              {"kind", v.kind},
              {"complete", v.complete},
              {"listed", v.listed},
              {"class_count", v.class_count},
              {"omitted", v.omitted},
              {"omitted_degree", v.omitted_degree},
              {"first_orthogonality", v.first_orthogonality},
              {"second_orthogonality", v.second_orthogonality},
              {"norms", v.norms},
              {"degree_sum", v.degree_sum},
              {"count_matches", v.count_matches},
              {"omega_homomorphism", v.omega_homomorphism},
              {"omega_checked", v.omega_checked},
              {"ok", v.ok()},
              {"failures", v.failures}};
}

json search_json(const SearchResult& r, bool timing) {
  json sets = json::array();
  for (const auto& S : r.sets) sets.push_back(set_json(S));
  json j{{"found", r.stats.found},
         {"parameters_feasible", r.stats.parameters_feasible},
         {"central_candidates", r.stats.central_candidates},
         {"nodes", r.stats.nodes},
         {"leaves", r.stats.leaves},
         {"sets", std::move(sets)}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

void write_table_csv(std::ostream& os, const CharacterTable& table) {
  const Group G(table.field_ptr());
  const std::uint64_t ncls = G.class_count();
  os << "character";
  for (std::uint64_t c = 0; c < ncls; ++c) {
    const ClassId id = G.class_at(c);
    if (id.is_central()) os << ",C(b=" << id.key << ")";
    else os << ",C(a=" << id.a.index << ";x=" << id.key << ")";
  }
  os << '\n';
  for (std::uint64_t i = 0; i < table.count(); ++i) {
    const CharId chi = table.at(i);
    os << char_family_name(chi.family) << "(v=" << chi.v.index << ";w=" << chi.w << ";s=" << chi.s << ")";
    for (std::uint64_t c = 0; c < ncls; ++c) {
      std::string cell = cycint_json(table.value(chi, G.class_at(c))).dump();
      std::string quoted;
      for (char ch : cell) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      os << ",\"" << quoted << '"';
    }
    os << '\n';
  }
}

}  // namespace suzuki

// Acceptance suite: one PASS/FAIL line per criterion.  Every comparison is
// exact (integer or cyclotomic equality); the time limits are wall-clock.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "suzuki/verifier.hpp"

using namespace suzuki;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<bool(std::ostringstream&)> run;
};

struct Env {
  FieldPtr F;
  Group G;
  CharacterTable T;
  VerifyContext ctx;
  explicit Env(const char* spec) : F(Field::parse(spec)), G(F), T(F), ctx{&G, &T, 0} {}
};

bool both_ds(const Env& e, const CentralSet& S, const DSParams& want, std::ostringstream& log) {
  const VerifyReport a = check_ds(e.ctx, S, Method::GroupRing);
  const VerifyReport b = check_ds(e.ctx, S, Method::Character);
  const bool ok = a.result && b.result && a.ds == want && b.ds == want;
  if (!ok) log << " [set of size " << S.cardinality() << " failed]";
  return ok;
}

bool c1(std::ostringstream& log) {
  const Env e("2,3,1");
  const std::vector<VariantSpec> variants{VariantSpec::all(Choice::Ker), VariantSpec::all(Choice::Comp),
                                          VariantSpec::seeded(1, 8), VariantSpec::seeded(2, 8)};
  int sets = 0;
  bool ok = true;
  for (std::uint32_t t = 1; t < 8; ++t)
    for (const auto& v : variants) {
      ok = both_ds(e, build_ds_tz(e.F, {t}, {1}, v), {64, 28, 12, 16}, log) && ok;
      ++sets;
    }
  log << sets << " sets";
  return ok && sets == 28;
}

bool c2(std::ostringstream& log) {
  const Env e("2,5,1");
  bool ok = both_ds(e, build_ds_tz(e.F, {1}, {1}, VariantSpec::seeded(7, 32)), {1024, 496, 240, 256}, log);
  ok = both_ds(e, build_ds_z(e.F, {1}, VariantSpec::all(Choice::Comp)), {1024, 496, 240, 256}, log) && ok;
  log << "D_(t,z) and D_z";
  return ok;
}

bool c3(std::ostringstream& log) {
  const Env e("2,6,2");
  const LinkingFamily fam = build_linking_Rt(e.F, {1});
  const VerifyReport r = check_linking(e.ctx, fam, Method::GroupRing);
  if (r.linking) log << "l = " << r.linking->l << ", mu - eta = " << r.linking->mu - r.linking->eta << ", eta = " << r.linking->eta;
  return r.result && fam.sets.size() == 3 && r.linking && r.linking->mu - r.linking->eta == -32 &&
         r.linking->eta == 1008 && r.checked == 6;
}

bool c4(std::ostringstream& log) {
  const Env e("2,2,1");
  // unpruned oracle over every central subset of size 6
  const SearchResult b = brute_force_central(e.ctx, 6, [&](const CentralSet& S) {
    const VerifyReport r = check_ds(e.ctx, S, Method::GroupRing);
    return r.result && !r.trivial;
  });
  const SearchResult s = search_central_ds(e.ctx, {16, 6, 2, 4});
  log << "oracle leaves " << b.stats.leaves << ", found " << b.sets.size() << "; search found " << s.sets.size();
  return b.sets.empty() && s.sets.empty();
}

bool c5(std::ostringstream& log) {
  const Env e("3,2,1");
  const SearchResult a = search_central_pds(e.ctx, {81, 24, 9, 6});
  const SearchResult b = search_central_pds(e.ctx, {81, 32, 13, 12});
  log << "(81,24,9,6): " << a.sets.size() << ", (81,32,13,12): " << b.sets.size();
  return a.sets.empty() && b.sets.empty() && a.stats.parameters_feasible && b.stats.parameters_feasible;
}

bool c6(std::ostringstream& log) {
  const Env e("2,3,1");
  const SearchResult s = search_central_ds(e.ctx, {64, 28, 12, 16});
  std::uint64_t ex4 = 0, ex5 = 0, unmatched = 0;
  for (const auto& S : s.sets) {
    const auto m = match_example_mf(S);
    if (!m) ++unmatched;
    else (m->example == 4 ? ex4 : ex5)++;
  }
  constexpr std::uint64_t kParameterizationCount = 7 * 2 * 64 + 128;
  log << "found " << s.sets.size() << " (with B " << ex4 << ", without B " << ex5 << ", unmatched " << unmatched
      << "); parameterization count " << kParameterizationCount;
  return unmatched == 0 && !s.sets.empty() && s.sets.size() == kParameterizationCount;
}

bool c7(std::ostringstream& log) {
  bool ok = true;
  for (const char* spec : {"2,3,1", "2,5,1", "5,3,1", "2,2,1", "3,2,1"}) {
    const TableValidation v = validate_table(CharacterTable(Field::parse(spec)));
    const bool good = v.ok() && v.complete && v.first_orthogonality && v.second_orthogonality && v.norms &&
                      v.degree_sum && v.count_matches;
    if (!good) log << spec << " failed; ";
    ok = ok && good;
  }
  const TableValidation p = validate_table(CharacterTable(Field::parse("2,4,1")));
  const bool partial = p.ok() && !p.complete && p.listed == 26 && p.omitted == 20 && p.first_orthogonality && p.norms &&
                       p.degree_sum;
  log << "complete tables x5, partial (2,4,1): " << p.listed << " listed, " << p.omitted << " omitted";
  return ok && partial;
}

bool c8(std::ostringstream& log) {
  const Env e("2,2,1");
  std::vector<CentralSet> all;
  const std::uint64_t n = e.G.class_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    CentralSet S(e.F);
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask >> i & 1) S.insert(e.G.class_at(i));
    all.push_back(std::move(S));
  }
  const CrossValidation x = cross_validate_sets(e.ctx, all);
  const Env a("2,3,1"), b("2,6,2");
  const CrossValidation y = cross_validate(a.ctx, 100, 42);
  const CrossValidation z = cross_validate(b.ctx, 100, 42);
  log << "(2,2,1) " << x.agreements << "/" << all.size() << ", (2,3,1) " << y.agreements << "/100, (2,6,2) "
      << z.agreements << "/100";
  return x.report.result && y.report.result && z.report.result && x.agreements == all.size() && all.size() == 1024 &&
         y.agreements == 100 && z.agreements == 100;
}

bool c9(std::ostringstream& log) {
  bool ok = true;
  // (a) preconditions
  try {
    build_pds_z(Field::parse("5,3,1"));
    ok = false;
  } catch (const Error& err) {
    ok = ok && err.code() == Errc::NoValidZ;
  }
  try {
    build_pds_z(Field::parse("3,2,1"));
    ok = false;
  } catch (const Error& err) {
    ok = ok && err.code() == Errc::PreconditionViolated;
  }
  // (b) (5,9,3)
  const FieldPtr F = Field::parse("5,9,3");
  const Group G(F);
  const CharacterTable T(F);
  const CentralSet D = build_pds_tz(F, Field::one());
  constexpr std::uint64_t p8 = 390625, p9 = 1953125;
  const std::uint64_t card = streamed_cardinality(G, D);
  const VerifyReport reg = sampled_regularity_check(G, D, 100000, 1);
  const VerifyReport om = sampled_char_check(T, D, {-static_cast<std::int64_t>(p8), 4 * static_cast<std::int64_t>(p8)}, 1000, 1);
  // (c) complement identity on (B, Gamma)
  const bool comp = complement_minus_identity(build_pds_z_dprime(F)) == build_pds_z_prime(F);
  log << "|D| = " << card << ", regularity " << reg.checked << " classes, omega " << om.checked << " characters, "
      << om.witness_total << " misses";
  return ok && card == p8 * (p9 - 1) && reg.result && reg.checked == 100000 && om.result && om.checked == 1000 &&
         om.witness_total == 0 && comp;
}

bool c10(std::ostringstream& log) {
  int done = 0;
  bool ok = true;
  for (const char* spec : {"2,3,1", "2,6,2"}) {
    const FieldPtr F = Field::parse(spec);
    const Group G(F);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const VariantSpec v = VariantSpec::seeded(seed, F->order());
      std::optional<FieldElement> t;
      if (seed % 2) t = F->element(static_cast<std::uint32_t>(seed % (F->order() - 1) + 1));
      const CentralSet S = t ? build_ds_tz(F, *t, {1}, v) : build_ds_z(F, {1}, v);
      try {
        const DillonWitness w = dillon_form_of(G, S, {1}, t);
        ok = ok && build_dillon(G, w.spec) == S.elements(G);
      } catch (const Error& err) {
        log << spec << " seed " << seed << ": " << err.what() << "; ";
        ok = false;
      }
      ++done;
    }
  }
  log << done << " sets";
  return ok && done == 20;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "DS at (2,3,1), all t, four variant patterns, both engines", 1.0, c1},
      {2, "DS (1024,496,240,256) at (2,5,1), both engines", 5.0, c2},
      {3, "linking family of 3 at (2,6,2), group ring", 60.0, c3},
      {4, "no nontrivial central (16,6,2,4) DS at (2,2,1)", 1.0, c4},
      {5, "no central PDS (81,24,9,6) or (81,32,13,12) at (3,2,1)", 600.0, c5},
      {6, "central (64,28,12,16) DS at (2,3,1) all match the m = f examples", 120.0, c6},
      {7, "character table validation", 30.0, c7},
      {8, "engine equivalence (exhaustive at (2,2,1), sampled at (2,3,1) and (2,6,2))", 120.0, c8},
      {9, "odd-p PDS properties at (5,9,3) and preconditions", 300.0, c9},
      {10, "Dillon form with element equality, 10 sets each at (2,3,1) and (2,6,2)", 30.0, c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    if (!in_time) log << " (over the time limit)";
    const bool pass = ok && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s [exact; %.3f s < %.0f s] %s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                c.limit_seconds, log.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "suzuki/verifier.hpp"

using namespace suzuki;
using suzuki::testing::errc_of;

namespace {

// Z_n as a group view, for engine self-tests on abelian groups.
FiniteGroupView cyclic(std::uint64_t n) {
  return {n, 0, [n](std::uint64_t x, std::uint64_t y) { return (x + n - y) % n; },
          [n](std::uint64_t x) { return (n - x) % n; }};
}

// Additive group of a field, elements by index.
FiniteGroupView additive(const FieldPtr& F) {
  return {F->order(), 0, [F](std::uint64_t x, std::uint64_t y) { return std::uint64_t{F->sub({static_cast<std::uint32_t>(x)}, {static_cast<std::uint32_t>(y)}).index}; },
          [F](std::uint64_t x) { return std::uint64_t{F->neg({static_cast<std::uint32_t>(x)}).index}; }};
}

// Difference counts computed without the engine.
std::vector<std::int64_t> naive_ddinv(const FiniteGroupView& G, const std::vector<std::uint64_t>& D) {
  std::vector<std::int64_t> c(G.order, 0);
  for (auto x : D)
    for (auto y : D) ++c[G.div(x, y)];
  return c;
}

// (lambda, mu) when D is a (possibly non-regular) PDS.
std::optional<std::pair<std::int64_t, std::int64_t>> naive_pds(const FiniteGroupView& G,
                                                                const std::vector<std::uint64_t>& D) {
  const auto c = naive_ddinv(G, D);
  std::set<std::uint64_t> in(D.begin(), D.end());
  std::optional<std::int64_t> lam, mu;
  for (std::uint64_t g = 0; g < G.order; ++g) {
    if (g == G.identity) continue;
    auto& r = in.count(g) ? lam : mu;
    if (!r) r = c[g];
    else if (*r != c[g]) return std::nullopt;
  }
  return std::make_pair(lam.value_or(0), mu.value_or(0));
}

std::vector<std::uint64_t> nonzero_squares(const FieldPtr& F) {
  std::set<std::uint64_t> s;
  for (std::uint32_t a = 1; a < F->order(); ++a) s.insert(F->mul({a}, {a}).index);
  return {s.begin(), s.end()};
}

std::vector<std::uint64_t> complement(std::uint64_t n, const std::vector<std::uint64_t>& D) {
  std::set<std::uint64_t> in(D.begin(), D.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t g = 0; g < n; ++g)
    if (!in.count(g)) out.push_back(g);
  return out;
}

struct Ctx {
  FieldPtr F;
  Group G;
  CharacterTable T;
  VerifyContext ctx;
  explicit Ctx(const char* spec) : F(Field::parse(spec)), G(F), T(F), ctx{&G, &T, 0} {}
};

}  // namespace

TEST_CASE("parameter helpers") {
  CHECK(ds_params_for(64, 28) == DSParams{64, 28, 12, 16});
  CHECK_FALSE(ds_params_for(64, 27));
  CHECK(ds_params_consistent({16, 6, 2, 4}));
  CHECK_FALSE(ds_params_consistent({16, 6, 2, 3}));
  CHECK(pds_params_consistent({9, 4, 1, 2}));
  CHECK_FALSE(pds_params_consistent({81, 24, 9, 7}));
  const auto lp = linking_params_for({4096, 2016, 992, 1024});
  REQUIRE_FALSE(lp.empty());
  bool found = false;
  for (const auto& p : lp) found |= p.eta == 1008 && p.mu - p.eta == -32;
  CHECK(found);
  // (n^2, r(n - eps), r^2 + eps(n - 3r), r^2 - eps r)
  CHECK(latin_square_type({81, 24, 9, 6}) == 1);
  CHECK(latin_square_type({81, 32, 13, 12}) == 1);
  CHECK(latin_square_type({16, 5, 0, 2}) == -1);
  CHECK_FALSE(latin_square_type({9, 4, 1, 3}));
  CHECK(parse_method("both") == Method::Both);
  CHECK(errc_of([] { parse_method("fast"); }) == Errc::ParseError);
}

TEST_CASE("convolution matches the naive count on cyclic groups") {
  const FiniteGroupView G = cyclic(31);
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::uint64_t> D;
    for (std::uint64_t g = 0; g < 31; ++g)
      if (rng() & 1) D.push_back(g);
    CHECK(convolve_ddinv(G, D, 1) == naive_ddinv(G, D));
    CHECK(convolve_ddinv(G, D, 3) == naive_ddinv(G, D));
  }
}

TEST_CASE("convolution is additive over disjoint splits") {
  const Group G(Field::parse("2,3,1"));
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<GroupElement> D1, D2, E;
    for (std::uint64_t i = 0; i < G.order(); ++i) {
      const auto r = rng() % 4;
      if (r == 0) D1.push_back(G.element(i));
      if (r == 1) D2.push_back(G.element(i));
      if (rng() & 1) E.push_back(G.element(i));
    }
    std::vector<GroupElement> D = D1;
    D.insert(D.end(), D2.begin(), D2.end());
    const auto a = convolve(G, D, E), b = convolve(G, D1, E), c = convolve(G, D2, E);
    for (std::uint64_t g = 0; g < G.order(); ++g) CHECK(a[g] == b[g] + c[g]);
  }
}

TEST_CASE("convolution of trivial sets") {
  const Group G(Field::parse("2,3,1"));
  const auto id = convolve(G, {Group::identity()}, {Group::identity()});
  CHECK(id[0] == 1);
  CHECK(std::count(id.begin(), id.end(), 0) == static_cast<long>(G.order() - 1));
  // the centre is a subgroup: |K| on K, 0 elsewhere
  const auto Z = G.center();
  const auto c = convolve(G, Z, Z);
  for (std::uint64_t i = 0; i < G.order(); ++i) CHECK(c[i] == (G.element(i).a.index == 0 ? 8 : 0));
}

TEST_CASE("Paley sets through the group-ring engine") {
  const FieldPtr F9 = Field::parse("3,2,1");
  const auto Q = nonzero_squares(F9);
  REQUIRE(Q.size() == 4);
  const VerifyReport r = check_pds_groupring(additive(F9), Q);
  CHECK(r.result);
  CHECK(r.pds == PDSParams{9, 4, 1, 2});
  const FiniteGroupView Z13 = cyclic(13);
  std::set<std::uint64_t> sq;
  for (std::uint64_t x = 1; x < 13; ++x) sq.insert(x * x % 13);
  const VerifyReport r13 = check_pds_groupring(Z13, {sq.begin(), sq.end()});
  CHECK(r13.result);
  CHECK(r13.pds == PDSParams{13, 6, 2, 3});
  // quadratic residues mod 11 form an (11,5,2) difference set
  std::set<std::uint64_t> q11;
  for (std::uint64_t x = 1; x < 11; ++x) q11.insert(x * x % 11);
  const VerifyReport d11 = check_ds_groupring(cyclic(11), {q11.begin(), q11.end()});
  CHECK(d11.result);
  CHECK(d11.ds == DSParams{11, 5, 2, 3});
}

TEST_CASE("complements of a PDS containing the identity") {
  // S = Q u {0} and S = subgroup; both contain the identity.
  struct Case {
    FiniteGroupView G;
    std::vector<std::uint64_t> S;
  };
  const FieldPtr F9 = Field::parse("3,2,1");
  auto paley = nonzero_squares(F9);
  paley.push_back(0);
  std::vector<Case> cases{{additive(F9), paley}, {cyclic(12), {0, 3, 6, 9}}, {cyclic(15), {0, 5, 10}}};
  const FieldPtr F16 = Field::parse("2,4,1");
  cases.push_back({additive(F16), {0, 1, 2, 3}});
  for (const auto& c : cases) {
    REQUIRE(naive_pds(c.G, c.S));
    const VerifyReport bad = check_pds_groupring(c.G, c.S);
    CHECK_FALSE(bad.result);
    CHECK(bad.witnesses.front().kind == "regularity");
    std::vector<std::uint64_t> minus_id;
    for (auto x : c.S)
      if (x != c.G.identity) minus_id.push_back(x);
    const VerifyReport a = check_pds_groupring(c.G, complement(c.G.order, c.S));
    const VerifyReport b = check_pds_groupring(c.G, minus_id);
    CHECK(a.result);
    CHECK(b.result);
    const auto na = naive_pds(c.G, complement(c.G.order, c.S));
    REQUIRE(na);
    CHECK(a.pds->lambda == na->first);
    CHECK(a.pds->mu == na->second);
  }
}

TEST_CASE("constructed difference sets pass both engines") {
  Ctx c("2,3,1");
  const CentralSet S = build_ds_tz(c.F, {1}, {1}, VariantSpec::all(Choice::Ker));
  for (Method m : {Method::GroupRing, Method::Character, Method::Both}) {
    const VerifyReport r = check_ds(c.ctx, S, m);
    CHECK(r.result);
    CHECK(r.ds == DSParams{64, 28, 12, 16});
    CHECK_FALSE(r.trivial);
  }
}

TEST_CASE("every one-class mutation of a difference set fails with a witness") {
  Ctx c("2,3,1");
  const CentralSet S = build_ds_tz(c.F, {3}, {1}, VariantSpec::seeded(4, 8));
  for (std::uint64_t i = 0; i < c.G.class_count(); ++i) {
    CentralSet M = S;
    const ClassId id = c.G.class_at(i);
    if (M.contains(id)) M.erase(id);
    else M.insert(id);
    for (Method m : {Method::GroupRing, Method::Character}) {
      const VerifyReport r = check_ds(c.ctx, M, m);
      CHECK_FALSE(r.result);
      CHECK_FALSE(r.witnesses.empty());
      CHECK(r.witnesses.size() <= kWitnessCap);
    }
  }
}

TEST_CASE("trivial and empty sets") {
  Ctx c("2,3,1");
  CentralSet all(c.F);
  for (std::uint64_t i = 0; i < c.G.class_count(); ++i) all.insert(c.G.class_at(i));
  for (Method m : {Method::GroupRing, Method::Character}) {
    const VerifyReport r = check_ds(c.ctx, all, m);
    CHECK(r.result);
    CHECK(r.trivial);
    const VerifyReport e = check_ds(c.ctx, CentralSet(c.F), m);
    CHECK(e.result);
    CHECK(e.trivial);
  }
}

TEST_CASE("PDS regularity witness") {
  Ctx c("3,2,1");
  CentralSet S(c.F);
  S.insert(ClassId::central({0}));
  const VerifyReport r = check_pds(c.ctx, S, Method::GroupRing);
  CHECK_FALSE(r.result);
  CHECK(r.witnesses.front().kind == "regularity");
}

TEST_CASE("engines agree on every central subset at (2,2,1)") {
  Ctx c("2,2,1");
  const std::uint64_t n = c.G.class_count();
  REQUIRE(n == 10);
  std::uint64_t ds_nontrivial = 0;
  for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
    CentralSet S(c.F);
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask >> i & 1) S.insert(c.G.class_at(i));
    const VerifyReport a = check_ds(c.ctx, S, Method::GroupRing), b = check_ds(c.ctx, S, Method::Character);
    CHECK(a.result == b.result);
    CHECK(a.trivial == b.trivial);
    if (a.result) CHECK(a.ds == b.ds);
    if (a.result && !a.trivial) ++ds_nontrivial;
    const VerifyReport x = check_pds(c.ctx, S, Method::GroupRing), y = check_pds(c.ctx, S, Method::Character);
    CHECK(x.result == y.result);
    if (x.result) CHECK(x.pds == y.pds);
  }
  CHECK(ds_nontrivial == 0);
}

TEST_CASE("cross validation at (2,3,1)") {
  Ctx c("2,3,1");
  const CentralSet S = build_ds_tz(c.F, {1}, {1}, {});
  const CrossValidation cv = cross_validate(c.ctx, 100, 42, {S, CentralSet(c.F)});
  CHECK(cv.report.result);
  CHECK(cv.agreements == 102);
  CHECK(cv.ds_true >= 2);
}

TEST_CASE("linking systems at (2,6,2)") {
  Ctx c("2,6,2");
  const LinkingFamily fam = build_linking_Rt(c.F, {1});
  const VerifyReport gr = check_linking(c.ctx, fam, Method::GroupRing);
  CHECK(gr.result);
  REQUIRE(gr.linking);
  CHECK(gr.linking->eta == 1008);
  CHECK(gr.linking->mu - gr.linking->eta == -32);
  CHECK(gr.linking->l == 3);
  // eta must be k(k +- sqrt n)/v for the observed parameters
  const auto cand = linking_params_for(*gr.ds);
  CHECK(std::find(cand.begin(), cand.end(), LinkingParams{gr.linking->mu, gr.linking->eta, 0}) != cand.end());

  const VerifyReport ch = check_linking(c.ctx, fam, Method::Character);
  CHECK(ch.result);
  CHECK(ch.linking == gr.linking);

  // every third replaced by the wrong sign variant
  for (Method m : {Method::GroupRing, Method::Character}) {
    const VerifyReport bad = check_linking(
        c.ctx, fam.sets,
        [&](std::size_t i, std::size_t j) -> std::optional<CentralSet> {
          ThirdSet th = fam.third_spec(i, j);
          th.spec.gamma = th.spec.gamma == Choice::Ker ? Choice::Comp : Choice::Ker;
          return fam.member(th.z, th.spec);
        },
        m);
    CHECK_FALSE(bad.result);
    CHECK_FALSE(bad.witnesses.empty());
  }

  const LinkingFamily mixed =
      build_linking_R(c.F, {{Choice::Ker, Choice::Comp}, {Choice::Comp, Choice::Ker}, {Choice::Comp, Choice::Comp}});
  CHECK(check_linking(c.ctx, mixed, Method::Both).result);
}

TEST_CASE("degenerate linking family") {
  Ctx c("2,3,1");
  const LinkingFamily fam = build_linking_R(c.F);
  const VerifyReport r = check_linking(c.ctx, fam, Method::Both);
  CHECK(r.result);
  CHECK(r.degenerate);
}

TEST_CASE("linking members with unequal sizes") {
  Ctx c("2,3,1");
  const CentralSet a = build_ds_z(c.F, {1}, {});
  CentralSet b = a;
  b.insert(ClassId::central({1}));
  CHECK(errc_of([&] { check_linking(c.ctx, {a, b}, nullptr, Method::GroupRing); }) == Errc::ParameterMismatch);
}

TEST_CASE("search equals the brute-force oracle at (2,3,1)") {
  Ctx c("2,3,1");
  const SearchResult s = search_central_ds(c.ctx, {64, 28, 12, 16});
  const FiniteGroupView V = view_of(c.G);
  const SearchResult b = brute_force_central(c.ctx, 28, [&](const CentralSet& S) {
    std::vector<std::uint64_t> idx;
    for (auto g : S.elements(c.G)) idx.push_back(c.G.index(g));
    const auto cnt = naive_ddinv(V, idx);
    for (std::uint64_t g = 1; g < cnt.size(); ++g)
      if (cnt[g] != 12) return false;
    return true;
  });
  CHECK(s.sets.size() == 1024);
  CHECK(s.sets == b.sets);
  for (const auto& S : s.sets) CHECK(match_example_mf(S));
}

TEST_CASE("PDS search equals an exhaustive naive enumeration at (2,2,1)") {
  Ctx c("2,2,1");
  const FiniteGroupView V = view_of(c.G);
  const std::uint64_t n = c.G.class_count();
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::vector<CentralSet>> oracle;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    CentralSet S(c.F);
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask >> i & 1) S.insert(c.G.class_at(i));
    std::vector<std::uint64_t> idx;
    for (auto g : S.elements(c.G)) idx.push_back(c.G.index(g));
    const std::set<std::uint64_t> in(idx.begin(), idx.end());
    if (idx.empty() || idx.size() + 1 >= V.order || in.count(V.identity)) continue;
    bool symmetric = true;
    for (auto g : idx) symmetric = symmetric && in.count(V.inv(g));
    if (!symmetric) continue;
    if (const auto lm = naive_pds(V, idx))
      oracle[{static_cast<std::int64_t>(idx.size()), lm->first, lm->second}].push_back(std::move(S));
  }
  CHECK(oracle.size() >= 2);
  for (auto& [key, sets] : oracle) {
    const auto [k, lambda, mu] = key;
    CAPTURE(k);
    CAPTURE(lambda);
    CAPTURE(mu);
    std::sort(sets.begin(), sets.end());
    CHECK(search_central_pds(c.ctx, {16, k, lambda, mu}).sets == sets);
  }
}

TEST_CASE("search results do not depend on the thread count") {
  const FieldPtr F = Field::parse("2,3,1");
  const Group G(F);
  const CharacterTable T(F);
  const SearchResult one = search_central_ds({&G, &T, 1}, {64, 28, 12, 16});
  const SearchResult many = search_central_ds({&G, &T, 4}, {64, 28, 12, 16});
  CHECK(one.sets == many.sets);
  CHECK(one.stats.nodes == many.stats.nodes);
}

TEST_CASE("nonexistence searches") {
  Ctx c("2,2,1");
  CHECK(search_central_ds(c.ctx, {16, 6, 2, 4}).sets.empty());
  Ctx d("3,2,1");
  CHECK(search_central_pds(d.ctx, {81, 24, 9, 6}).sets.empty());
  CHECK(search_central_pds(d.ctx, {81, 32, 13, 12}).sets.empty());
  const SearchResult bad = search_central_pds(d.ctx, {81, 24, 9, 7});
  CHECK(bad.sets.empty());
  CHECK_FALSE(bad.stats.parameters_feasible);
}

TEST_CASE("budget guards") {
  Ctx c("2,6,2");
  CHECK(errc_of([&] { brute_force_central(c.ctx, 10, [](const CentralSet&) { return true; }); }) ==
        Errc::SearchSpaceTooLarge);
  CHECK(errc_of([&] { search_central_ds(c.ctx, {4096, 2016, 992, 1024}); }) == Errc::SearchSpaceTooLarge);
  const FieldPtr F = Field::parse("5,9,3");
  const Group G(F);
  const VerifyContext big{&G, nullptr, 0};
  CHECK(errc_of([&] { check_pds(big, build_pds_z(F), Method::GroupRing); }) == Errc::TooLarge);
}

TEST_CASE("character method refuses non-central element lists") {
  Ctx c("2,3,1");
  std::vector<GroupElement> D{c.G.element(9), c.G.element(10)};
  CHECK(errc_of([&] { check_ds_elements(c.ctx, D, Method::Character); }) == Errc::NonCentralSetForCharacterMethod);
  CHECK_FALSE(check_ds_elements(c.ctx, D, Method::GroupRing).result);
}

TEST_CASE("character method on a partial table") {
  Ctx c("2,4,1");
  // k = 120 gives integral (256,120,56,64); this union of classes is not a DS
  CentralSet S(c.F);
  for (std::uint64_t i = 0; i < 8; ++i) S.insert(c.G.class_at(i));
  for (std::uint64_t i = 16; i < 30; ++i) S.insert(c.G.class_at(i));
  REQUIRE(S.cardinality() == 120);
  // a failure seen on the listed characters is conclusive
  CHECK_FALSE(check_ds(c.ctx, S, Method::Character).result);
}

TEST_CASE("sampled checks detect a dropped class") {
  const FieldPtr F = Field::parse("5,9,3");
  const CharacterTable T(F);
  const Group G(F);
  const CentralSet S = build_pds_tz(F, {1});
  const std::int64_t p8 = 390625;
  const VerifyReport ok = sampled_char_check(T, S, {-p8, 4 * p8}, 40, 1);
  CHECK(ok.result);
  CHECK(ok.checked == 40);
  CHECK(streamed_cardinality(G, S) == S.cardinality());
  CHECK(sampled_regularity_check(G, S, 2000, 3).result);

  CentralSet bad = S;
  bad.erase(ClassId::central(F->exp(7)));
  if (bad == S) bad.insert(ClassId::central(F->exp(7)));
  CHECK_FALSE(sampled_char_check(T, bad, {-p8, 4 * p8}, 40, 1).result);
}

TEST_CASE("odd-p partial difference sets at a small admissible size through omega") {
  // The character engine alone decides the PDS property at (5,9,3); this
  // checks the expected omega values on the other three sets.
  const FieldPtr F = Field::parse("5,9,3");
  const CharacterTable T(F);
  const std::int64_t p8 = 390625, p9 = 5 * p8;
  CHECK(sampled_char_check(T, build_pds_z(F), {-p8, 4 * p8}, 25, 2).result);
  CHECK(sampled_char_check(T, build_pds_z_prime(F), {p9 - p8 - 1, -p8 - 1}, 25, 2).result);
  CHECK(sampled_char_check(T, build_pds_z_dprime(F), {-p9 + p8, p8}, 25, 2).result);
}

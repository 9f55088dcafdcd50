#include <complex>
#include <algorithm>
#include <map>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "suzuki/characters.hpp"

using namespace suzuki;
using suzuki::testing::errc_of;
using cd = std::complex<double>;

namespace {

bool close(cd a, cd b, double tol = 1e-6) { return std::abs(a - b) < tol; }

// chi evaluated on every group element through its class.
std::vector<cd> element_values(const CharacterTable& T, const Group& G, const CharId& chi) {
  std::vector<cd> out(G.order());
  std::map<ClassId, cd> cache;
  for (std::uint64_t i = 0; i < G.order(); ++i) {
    const ClassId c = G.class_of(G.element(i));
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, T.value(chi, c).to_complex()).first;
    out[i] = it->second;
  }
  return out;
}

}  // namespace

TEST_CASE("table sizes per family") {
  struct Row {
    const char* spec;
    TableKind kind;
    std::uint64_t listed, omitted;
  };
  for (const Row& r : {Row{"2,2,1", TableKind::FTwo, 10, 0}, Row{"3,2,1", TableKind::FTwo, 17, 0},
                       Row{"2,3,1", TableKind::OddFTwo, 22, 0}, Row{"5,3,1", TableKind::OddFOdd, 745, 0},
                       Row{"2,4,1", TableKind::EvenF, 26, 20}}) {
    const CharacterTable T(Field::parse(r.spec));
    const Group G(T.field_ptr());
    CHECK(T.kind() == r.kind);
    CHECK(T.omitted_count() == r.omitted);
    if (r.kind != TableKind::EvenF) CHECK(T.count() == G.class_count());
    else CHECK(T.count() == r.listed);
  }
}

TEST_CASE("elementwise orthogonality and norms by direct summation") {
  for (const char* spec : {"2,2,1", "3,2,1", "2,3,1", "2,4,1", "2,4,2"}) {
    CAPTURE(spec);
    const CharacterTable T(Field::parse(spec));
    const Group G(T.field_ptr());
    std::vector<std::vector<cd>> vals;
    for (const CharId& chi : T.all()) vals.push_back(element_values(T, G, chi));
    const double n = static_cast<double>(G.order());
    for (std::size_t i = 0; i < vals.size(); ++i) {
      for (std::size_t j = i; j < vals.size(); ++j) {
        cd s = 0;
        for (std::uint64_t g = 0; g < G.order(); ++g) s += vals[i][g] * std::conj(vals[j][g]);
        CHECK(close(s / n, i == j ? cd(1) : cd(0)));
      }
    }
  }
}

TEST_CASE("linear characters are homomorphisms") {
  for (const char* spec : {"2,2,1", "3,2,1", "2,3,1", "2,4,1"}) {
    CAPTURE(spec);
    const CharacterTable T(Field::parse(spec));
    const Group G(T.field_ptr());
    for (const CharId& chi : T.all()) {
      if (!T.is_linear(chi)) continue;
      const auto v = element_values(T, G, chi);
      for (std::uint64_t i = 0; i < G.order(); i += 3)
        for (std::uint64_t j = 0; j < G.order(); j += 5)
          CHECK(close(v[G.index(G.mul(G.element(i), G.element(j)))], v[i] * v[j]));
    }
  }
}

TEST_CASE("omega is multiplicative on class sums computed in the group") {
  // Class-sum products C_i C_j by enumeration; omega must respect them.
  for (const char* spec : {"2,3,1", "3,2,1"}) {
    CAPTURE(spec);
    const CharacterTable T(Field::parse(spec));
    const Group G(T.field_ptr());
    const std::uint64_t ncls = G.class_count();
    for (std::uint64_t ci = 0; ci < ncls; ci += 3)
      for (std::uint64_t cj = 1; cj < ncls; cj += 4) {
        std::map<ClassId, std::int64_t> prod;
        for (auto x : G.class_elements(G.class_at(ci)))
          for (auto y : G.class_elements(G.class_at(cj))) ++prod[G.class_of(G.mul(x, y))];
        for (const CharId& chi : T.all()) {
          auto om = [&](ClassId c) {
            const Monomial mo = T.omega_class(chi, c);
            return cd(static_cast<double>(mo.coef)) *
                   std::polar(1.0, 2 * std::numbers::pi * mo.exp / T.root_order());
          };
          cd rhs = 0;
          for (auto [c, mult] : prod) rhs += cd(static_cast<double>(mult) / G.class_size(c)) * om(c);
          CHECK(close(om(G.class_at(ci)) * om(G.class_at(cj)), rhs, 1e-6));
        }
      }
  }
}

TEST_CASE("omega of a set is the sum of class omegas and scales chi") {
  const CharacterTable T(Field::parse("2,3,1"));
  const Group G(T.field_ptr());
  CentralSet S(T.field_ptr());
  for (std::uint64_t c = 0; c < G.class_count(); c += 2) S.insert(G.class_at(c));
  for (const CharId& chi : T.all()) {
    cd direct = 0;
    for (auto g : S.elements(G)) direct += T.value(chi, G.class_of(g)).to_complex();
    direct /= static_cast<double>(T.degree(chi));
    CHECK(close(T.omega(chi, S).to_complex(), direct));
  }
}

TEST_CASE("full validation passes on complete tables and the partial one") {
  for (const char* spec : {"2,2,1", "3,2,1", "2,3,1", "5,3,1", "2,4,1"}) {
    CAPTURE(spec);
    const TableValidation v = validate_table(CharacterTable(Field::parse(spec)));
    CHECK(v.ok());
    CHECK(v.first_orthogonality);
    CHECK(v.norms);
    CHECK(v.degree_sum);
  }
}

TEST_CASE("both readings of the f = 2 linear central values coincide") {
  for (const char* spec : {"2,2,1", "3,2,1", "2,4,2"}) {
    const FieldPtr F = Field::parse(spec);
    const CharacterTable A(F, {QReading::PlusOne, LinearF2Reading::RelativeTrace});
    const CharacterTable B(F, {QReading::PlusOne, LinearF2Reading::Embedded});
    CHECK(validate_table(B).ok());
    const Group G(F);
    // The two readings may label characters differently; compare as sets of rows.
    auto rows = [&](const CharacterTable& T) {
      std::vector<std::vector<std::string>> out;
      for (const CharId& chi : T.all()) {
        std::vector<std::string> r;
        for (std::uint64_t c = 0; c < G.class_count(); ++c) r.push_back(T.value(chi, G.class_at(c)).str());
        out.push_back(std::move(r));
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(rows(A) == rows(B));
  }
}

TEST_CASE("QuadAux helpers") {
  const FieldPtr F = Field::parse("2,6,2");
  const QuadAux Q(*F, QReading::PlusOne);
  CHECK(F->trace_e(Q.u0()) == 1);
  for (std::uint32_t u = 0; u < F->sub_order(); ++u) {
    const auto [delta, u1] = Q.split({u});
    CHECK(F->trace_e(u1) == 0);
    CHECK((delta ? F->sub_add(u1, Q.u0()) : u1) == SubfieldElement{u});
  }
  CHECK(errc_of([] { QuadAux(*Field::parse("3,3,1"), QReading::PlusOne); }) == Errc::PreconditionViolated);
}

TEST_CASE("Q is a quadratic form polarising to Tr_e(u u') on the trace-zero subspace") {
  for (const char* spec : {"2,6,2", "2,12,4", "2,9,3", "2,5,1"}) {
    CAPTURE(spec);
    const FieldPtr F = Field::parse(spec);
    const QuadAux Q(*F, QReading::PlusOne);
    std::vector<SubfieldElement> U;
    for (std::uint32_t u = 0; u < F->sub_order(); ++u)
      if (F->trace_e({u}) == 0) U.push_back({u});
    CHECK(U.size() == F->sub_order() / 2);
    for (auto u : U)
      for (auto w : U)
        CHECK(Q.Q(F->sub_add(u, w)) == (Q.Q(u) + Q.Q(w) + F->trace_e(F->sub_mul(u, w))) % 2);
  }
}

TEST_CASE("table errors") {
  CHECK(errc_of([] { CharacterTable(Field::parse("3,3,2")); }) == Errc::UnsupportedFamily);
  const CharacterTable T(Field::parse("2,3,1"));
  CHECK(errc_of([&] { T.at(T.count()); }) == Errc::InvalidArgument);
  const CentralSet S(Field::parse("2,5,1"));
  CHECK(errc_of([&] { T.omega(T.at(1), S); }) == Errc::ContextMismatch);
}

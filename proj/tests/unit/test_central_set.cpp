#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "suzuki/central_set.hpp"

using namespace suzuki;
using suzuki::testing::errc_of;

TEST_CASE("Bits basics") {
  Bits b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.members() == std::vector<std::uint32_t>{0, 64, 129});
  const Bits c = b.complement();
  CHECK(c.count() == 127);
  CHECK_FALSE(c.test(64));
  b.set(64, false);
  CHECK(b.count() == 2);
}

TEST_CASE("insert and erase track cardinality and the element list") {
  const FieldPtr F = Field::parse("2,4,2");
  const Group G(F);
  CentralSet S(F);
  std::mt19937_64 rng(7);
  std::set<GroupElement> oracle;
  for (int step = 0; step < 200; ++step) {
    const ClassId c = G.class_at(rng() % G.class_count());
    const auto members = G.class_elements(c);
    if (rng() & 1) {
      S.insert(c);
      oracle.insert(members.begin(), members.end());
    } else {
      S.erase(c);
      for (auto g : members) oracle.erase(g);
    }
    CHECK(S.cardinality() == oracle.size());
  }
  const auto el = S.elements(G);
  CHECK(std::set<GroupElement>(el.begin(), el.end()) == oracle);
  for (std::uint64_t i = 0; i < G.order(); ++i)
    CHECK(S.contains_element(G, G.element(i)) == (oracle.count(G.element(i)) > 0));
}

TEST_CASE("palette shares equal Gamma subsets") {
  const FieldPtr F = Field::parse("2,6,2");
  CentralSet S(F);
  Bits g(F->sub_order());
  g.set(1);
  for (std::uint32_t a = 1; a < F->order(); ++a) S.set_gamma({a}, g);
  CHECK(S.palette().size() == 2);
  CHECK(S.gamma_total() == F->order() - 1);
  CHECK(S.cardinality() == (F->order() - 1) * (F->order() / F->sub_order()));
  S.set_gamma({5}, Bits(F->sub_order()));
  CHECK(S.gamma_slot({5}) == 0);
}

TEST_CASE("equality and ordering ignore palette history") {
  const FieldPtr F = Field::parse("2,3,1");
  CentralSet A(F), B(F);
  A.insert(ClassId::generic({3}, {1}));
  A.insert(ClassId::central({2}));
  B.insert(ClassId::central({2}));
  B.insert(ClassId::generic({5}, {0}));
  B.erase(ClassId::generic({5}, {0}));
  B.insert(ClassId::generic({3}, {1}));
  CHECK(A == B);
  CHECK_FALSE(A < B);
  CHECK_FALSE(B < A);
  B.insert(ClassId::central({0}));
  CHECK((A < B) != (B < A));
}

TEST_CASE("for_each_class visits central then generic classes in order") {
  const FieldPtr F = Field::parse("2,3,1");
  CentralSet S(F);
  S.insert(ClassId::generic({4}, {1}));
  S.insert(ClassId::central({6}));
  S.insert(ClassId::generic({2}, {0}));
  S.insert(ClassId::central({1}));
  const std::vector<ClassId> want = {ClassId::central({1}), ClassId::central({6}), ClassId::generic({2}, {0}),
                                     ClassId::generic({4}, {1})};
  CHECK(S.classes() == want);
}

TEST_CASE("central set errors") {
  const FieldPtr F = Field::parse("2,3,1");
  CentralSet S(F);
  CHECK(errc_of([&] { S.set_gamma(Field::zero(), Bits(2)); }) == Errc::InvalidArgument);
  CHECK(errc_of([&] { S.set_gamma({1}, Bits(3)); }) == Errc::InvalidArgument);
  CHECK(errc_of([&] { S.set_B(Bits(4)); }) == Errc::InvalidArgument);
}

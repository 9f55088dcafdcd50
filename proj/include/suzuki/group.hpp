#pragma once

// The Suzuki p-group A_p(m, theta) on F_{p^m} x F_{p^m} with
//   (a,b)(c,d) = (a + c, b + d + a theta(c)).
//
// Elements have the dense index a*q + b (q = p^m).  Classes are either
// Central(b) = {(0,b)} or Generic(a,x) = {(a, j_a x + y) : y in Im f_{a,theta}}.
// Dense class index: central b -> b, generic (a,x) -> q + (a-1) p^e + x.

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "suzuki/field.hpp"

namespace suzuki {

struct GroupElement {
  FieldElement a;
  FieldElement b;
  friend constexpr auto operator<=>(GroupElement, GroupElement) = default;
};

struct ClassId {
  FieldElement a;       // zero for central classes
  std::uint32_t key = 0;  // b index (central) or x index (generic)

  static ClassId central(FieldElement b) { return {Field::zero(), b.index}; }
  static ClassId generic(FieldElement a, SubfieldElement x) { return {a, x.index}; }
  bool is_central() const noexcept { return a.index == 0; }
  FieldElement b() const noexcept { return {key}; }
  SubfieldElement x() const noexcept { return {key}; }
  friend constexpr auto operator<=>(ClassId, ClassId) = default;
};

struct ClassTable {
  std::vector<ClassId> ids;
  std::vector<std::uint64_t> sizes;
};

class Group {
 public:
  explicit Group(FieldPtr field);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint64_t order() const noexcept { return std::uint64_t{q_} * q_; }
  bool same_as(const Group& o) const noexcept { return field_->same_as(*o.field_); }
  void require_same(const Group& o) const;

  static constexpr GroupElement identity() noexcept { return {}; }
  GroupElement mul(GroupElement g, GroupElement h) const noexcept {
    const Field& F = *field_;
    return {F.add(g.a, h.a), F.add(F.add(g.b, h.b), F.mul(g.a, F.theta(h.a)))};
  }
  GroupElement inv(GroupElement g) const noexcept {
    const Field& F = *field_;
    return {F.neg(g.a), F.sub(F.mul(g.a, F.theta(g.a)), g.b)};
  }
  // g1 * g2^{-1}
  GroupElement div(GroupElement g1, GroupElement g2) const noexcept { return mul(g1, inv(g2)); }
  GroupElement conjugate(GroupElement h, GroupElement g) const noexcept { return mul(mul(h, g), inv(h)); }
  GroupElement commutator(GroupElement g, GroupElement h) const noexcept {
    return mul(mul(g, h), mul(inv(g), inv(h)));
  }

  std::uint64_t index(GroupElement g) const noexcept { return std::uint64_t{g.a.index} * q_ + g.b.index; }
  GroupElement element(std::uint64_t idx) const;

  // ---- classes -----------------------------------------------------------
  ClassId class_of(GroupElement g) const;
  std::uint64_t class_count() const noexcept;
  std::uint64_t class_size(ClassId c) const noexcept { return c.is_central() ? 1 : generic_size_; }
  std::uint64_t generic_class_size() const noexcept { return generic_size_; }
  std::uint64_t class_index(ClassId c) const;
  ClassId class_at(std::uint64_t idx) const;
  void validate(ClassId c) const;

  void for_each_element(ClassId c, const std::function<void(GroupElement)>& fn) const;
  std::vector<GroupElement> class_elements(ClassId c) const;
  ClassTable enumerate_classes() const;

  std::vector<GroupElement> center() const;
  std::vector<GroupElement> derived_subgroup() const;

 private:
  FieldPtr field_;
  std::uint32_t q_;
  std::uint64_t generic_size_;
};

}  // namespace suzuki

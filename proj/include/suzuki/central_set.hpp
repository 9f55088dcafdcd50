#pragma once

// A union of conjugacy classes, stored as (B, Gamma): B picks central
// classes, Gamma(a) picks the x of the generic classes over a.  Gamma is
// palette-encoded because constructions use only a handful of distinct
// subsets of F_{p^e}, which keeps sets over 5^9-element fields small.

#include <cstdint>
#include <vector>

#include "suzuki/group.hpp"

namespace suzuki {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n, bool value = false);

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) noexcept {
    if (value) w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }
  Bits complement() const;
  const std::vector<std::uint64_t>& words() const noexcept { return w_; }
  std::vector<std::uint32_t> members() const;

  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits& a, const Bits& b) { return a.w_ <=> b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class CentralSet {
 public:
  explicit CentralSet(FieldPtr field);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  const Bits& B() const noexcept { return B_; }
  void set_B(Bits b);
  void set_central(FieldElement b, bool in);

  const Bits& gamma(FieldElement a) const noexcept { return palette_[slot_[a.index]]; }
  std::uint16_t gamma_slot(FieldElement a) const noexcept { return slot_[a.index]; }
  const std::vector<Bits>& palette() const noexcept { return palette_; }
  void set_gamma(FieldElement a, const Bits& subset);

  bool contains(ClassId c) const noexcept {
    return c.is_central() ? B_.test(c.key) : gamma(c.a).test(c.key);
  }
  void insert(ClassId c);
  void erase(ClassId c);
  bool contains_element(const Group& g, GroupElement x) const { return contains(g.class_of(x)); }

  // |B| + p^{m-e} sum_a |Gamma(a)|
  std::uint64_t cardinality() const noexcept;
  std::uint64_t gamma_total() const noexcept { return gamma_total_; }
  std::uint64_t class_count() const noexcept { return B_.count() + gamma_total_; }

  // Central classes by b, then generic classes by (a, x); deterministic.
  template <class Fn>
  void for_each_class(Fn&& fn) const {
    for (std::uint32_t b = 0; b < q_; ++b)
      if (B_.test(b)) fn(ClassId::central(FieldElement{b}));
    for (std::uint32_t a = 1; a < q_; ++a) {
      const Bits& g = palette_[slot_[a]];
      if (slot_[a] == 0) continue;
      for (std::uint32_t x = 0; x < g.size(); ++x)
        if (g.test(x)) fn(ClassId::generic(FieldElement{a}, SubfieldElement{x}));
    }
  }
  std::vector<ClassId> classes() const;
  std::vector<GroupElement> elements(const Group& g) const;

  bool operator==(const CentralSet& o) const;
  bool operator<(const CentralSet& o) const;  // deterministic ordering for search output

 private:
  FieldPtr field_;
  std::uint32_t q_;
  std::uint64_t generic_size_;
  Bits B_;
  std::vector<Bits> palette_;        // palette_[0] is the empty subset
  std::vector<std::uint16_t> slot_;  // per a; slot_[0] unused
  std::uint64_t gamma_total_ = 0;
};

}  // namespace suzuki

#include "suzuki/central_set.hpp"

#include <algorithm>
#include <bit>

namespace suzuki {

Bits::Bits(std::size_t n, bool value) : n_(n), w_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  if (value && n % 64) w_.back() = (std::uint64_t{1} << (n % 64)) - 1;
}

std::size_t Bits::count() const noexcept {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Bits Bits::complement() const {
  Bits r = *this;
  for (auto& w : r.w_) w = ~w;
  if (n_ % 64) r.w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return r;
}

std::vector<std::uint32_t> Bits::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

CentralSet::CentralSet(FieldPtr field)
    : field_(std::move(field)),
      q_(field_->order()),
      generic_size_(field_->order() / field_->sub_order()),
      B_(field_->order()),
      palette_{Bits(field_->sub_order())},
      slot_(field_->order(), 0) {}

void CentralSet::set_B(Bits b) {
  if (b.size() != q_) throw Error(Errc::InvalidArgument, "B has the wrong universe size");
  B_ = std::move(b);
}

void CentralSet::set_central(FieldElement b, bool in) {
  if (b.index >= q_) throw Error(Errc::InvalidArgument, "b out of range");
  B_.set(b.index, in);
}

void CentralSet::set_gamma(FieldElement a, const Bits& subset) {
  if (a.index == 0 || a.index >= q_) throw Error(Errc::InvalidArgument, "Gamma(a) needs a in F^*");
  if (subset.size() != field_->sub_order())
    throw Error(Errc::InvalidArgument, "Gamma(a) has the wrong universe size");
  auto it = std::find(palette_.begin(), palette_.end(), subset);
  std::size_t slot = static_cast<std::size_t>(it - palette_.begin());
  if (it == palette_.end()) {
    if (palette_.size() == 0xFFFF) throw Error(Errc::TooLarge, "too many distinct Gamma subsets");
    palette_.push_back(subset);
  }
  gamma_total_ -= palette_[slot_[a.index]].count();
  slot_[a.index] = static_cast<std::uint16_t>(slot);
  gamma_total_ += palette_[slot].count();
}

void CentralSet::insert(ClassId c) {
  if (c.is_central()) {
    set_central(c.b(), true);
    return;
  }
  Bits g = gamma(c.a);
  g.set(c.key);
  set_gamma(c.a, g);
}

void CentralSet::erase(ClassId c) {
  if (c.is_central()) {
    set_central(c.b(), false);
    return;
  }
  Bits g = gamma(c.a);
  g.set(c.key, false);
  set_gamma(c.a, g);
}

std::uint64_t CentralSet::cardinality() const noexcept { return B_.count() + generic_size_ * gamma_total_; }

std::vector<ClassId> CentralSet::classes() const {
  std::vector<ClassId> out;
  for_each_class([&](ClassId c) { out.push_back(c); });
  return out;
}

std::vector<GroupElement> CentralSet::elements(const Group& g) const {
  std::vector<GroupElement> out;
  out.reserve(cardinality());
  for_each_class([&](ClassId c) { g.for_each_element(c, [&](GroupElement x) { out.push_back(x); }); });
  std::sort(out.begin(), out.end());
  return out;
}

bool CentralSet::operator==(const CentralSet& o) const {
  if (!field_->same_as(*o.field_) || B_ != o.B_) return false;
  for (std::uint32_t a = 1; a < q_; ++a)
    if (gamma(FieldElement{a}) != o.gamma(FieldElement{a})) return false;
  return true;
}

bool CentralSet::operator<(const CentralSet& o) const {
  if (B_ != o.B_) return B_ < o.B_;
  for (std::uint32_t a = 1; a < q_; ++a) {
    const Bits& x = gamma(FieldElement{a});
    const Bits& y = o.gamma(FieldElement{a});
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace suzuki

#include "suzuki/group.hpp"

namespace suzuki {

Group::Group(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw Error(Errc::InvalidArgument, "null field");
  q_ = field_->order();
  generic_size_ = q_ / field_->sub_order();
}

void Group::require_same(const Group& o) const {
  if (!same_as(o)) throw Error(Errc::ContextMismatch, field_->spec() + " vs " + o.field_->spec());
}

GroupElement Group::element(std::uint64_t idx) const {
  if (idx >= order()) throw Error(Errc::InvalidArgument, "group element index out of range");
  return {FieldElement{static_cast<std::uint32_t>(idx / q_)}, FieldElement{static_cast<std::uint32_t>(idx % q_)}};
}

ClassId Group::class_of(GroupElement g) const {
  if (g.a.index == 0) return ClassId::central(g.b);
  return ClassId::generic(g.a, field_->split(g.a, g.b).x);
}

std::uint64_t Group::class_count() const noexcept {
  const std::uint64_t qe = field_->sub_order();
  return std::uint64_t{q_} * qe + q_ - qe;
}

std::uint64_t Group::class_index(ClassId c) const {
  validate(c);
  if (c.is_central()) return c.key;
  return q_ + std::uint64_t{c.a.index - 1} * field_->sub_order() + c.key;
}

ClassId Group::class_at(std::uint64_t idx) const {
  if (idx >= class_count()) throw Error(Errc::InvalidArgument, "class index out of range");
  if (idx < q_) return ClassId::central(FieldElement{static_cast<std::uint32_t>(idx)});
  idx -= q_;
  const std::uint64_t qe = field_->sub_order();
  return ClassId::generic(FieldElement{static_cast<std::uint32_t>(idx / qe + 1)},
                          SubfieldElement{static_cast<std::uint32_t>(idx % qe)});
}

void Group::validate(ClassId c) const {
  if (c.a.index >= q_) throw Error(Errc::InvalidArgument, "class a out of range");
  if (c.is_central() ? c.key >= q_ : c.key >= field_->sub_order())
    throw Error(Errc::InvalidArgument, "class parameter out of range");
}

void Group::for_each_element(ClassId c, const std::function<void(GroupElement)>& fn) const {
  validate(c);
  if (c.is_central()) {
    fn({Field::zero(), c.b()});
    return;
  }
  const Field& F = *field_;
  const ImageDecomposition d = F.image_and_j(c.a);
  const FieldElement base = F.mul(d.j, F.embed(c.x()));
  // odometer over F_p-combinations of the image basis
  const std::size_t n = d.image_basis.size();
  std::vector<std::uint32_t> digit(n, 0);
  FieldElement y = Field::zero();
  while (true) {
    fn({c.a, F.add(base, y)});
    std::size_t i = 0;
    while (i < n) {
      y = F.add(y, d.image_basis[i]);
      if (++digit[i] < F.p()) break;
      digit[i] = 0;  // p additions of the same vector cancel
      ++i;
    }
    if (i == n) break;
  }
}

std::vector<GroupElement> Group::class_elements(ClassId c) const {
  std::vector<GroupElement> out;
  out.reserve(class_size(c));
  for_each_element(c, [&](GroupElement g) { out.push_back(g); });
  return out;
}

ClassTable Group::enumerate_classes() const {
  ClassTable t;
  const auto n = class_count();
  t.ids.reserve(n);
  t.sizes.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    t.ids.push_back(class_at(i));
    t.sizes.push_back(class_size(t.ids.back()));
  }
  return t;
}

std::vector<GroupElement> Group::center() const {
  std::vector<GroupElement> out;
  for (std::uint32_t b = 0; b < q_; ++b) out.push_back({Field::zero(), FieldElement{b}});
  return out;
}

std::vector<GroupElement> Group::derived_subgroup() const {
  const Field& F = *field_;
  std::vector<GroupElement> out;
  if (F.f() == 2) {
    for (std::uint32_t b = 0; b < q_; ++b)
      if (F.in_image(Field::one(), FieldElement{b})) out.push_back({Field::zero(), FieldElement{b}});
    return out;
  }
  return center();
}

}  // namespace suzuki

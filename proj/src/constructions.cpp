#include "suzuki/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "suzuki/characters.hpp"

namespace suzuki {

namespace {

void require_ds_field(const Field& F) {
  if (F.p() != 2) throw Error(Errc::PreconditionViolated, "central difference sets need p = 2");
  if (F.f() % 2 == 0) throw Error(Errc::PreconditionViolated, "central difference sets need f odd");
}

void require_nonzero(FieldElement t, const char* name) {
  if (t.index == 0) throw Error(Errc::ZeroParameter, std::string(name) + " must be nonzero");
}

void require_nonzero(SubfieldElement z, const Field& F) {
  if (z.index == 0) throw Error(Errc::ZeroParameter, "z must be nonzero");
  if (z.index >= F.sub_order()) throw Error(Errc::InvalidArgument, "z out of range");
}

Bits choose(const Bits& kernel, Choice c) { return c == Choice::Ker ? kernel : kernel.complement(); }

// a_t sqrt(z) in F_{p^m}
FieldElement skipped_a(const Field& F, FieldElement t, SubfieldElement z) {
  return F.mul(F.solve_a_v(t), F.embed(F.sqrt_subfield(z)));
}

}  // namespace

VariantSpec VariantSpec::seeded(std::uint64_t seed, std::uint32_t field_order) {
  std::mt19937_64 rng(seed);
  VariantSpec v;
  v.b = (rng() & 1u) ? Choice::Comp : Choice::Ker;
  v.gamma.assign(field_order, Choice::Ker);
  for (std::uint32_t a = 1; a < field_order; ++a) v.gamma[a] = (rng() & 1u) ? Choice::Comp : Choice::Ker;
  return v;
}

VariantSpec VariantSpec::parse(const std::string& text, std::uint32_t field_order) {
  if (text == "all-ker") return all(Choice::Ker);
  if (text == "all-comp") return all(Choice::Comp);
  if (text.rfind("seed:", 0) == 0) {
    const std::string num = text.substr(5);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, "bad seed in variant spec '" + text + "'");
    return seeded(std::stoull(num), field_order);
  }
  throw Error(Errc::ParseError, "unknown variant spec '" + text + "'");
}

Bits kernel_psi(const Field& F, FieldElement t) {
  Bits k(F.order());
  for (std::uint32_t b = 0; b < F.order(); ++b)
    if (F.trace_m(F.mul(t, FieldElement{b})) == 0) k.set(b);
  return k;
}

Bits kernel_phi(const Field& F, SubfieldElement z) {
  Bits k(F.sub_order());
  for (std::uint32_t x = 0; x < F.sub_order(); ++x)
    if (F.trace_e(F.sub_mul(z, SubfieldElement{x})) == 0) k.set(x);
  return k;
}

CentralSet build_ds_tz(const FieldPtr& F, FieldElement t, SubfieldElement z, const VariantSpec& spec) {
  require_ds_field(*F);
  require_nonzero(t, "t");
  require_nonzero(z, *F);
  CentralSet S(F);
  S.set_B(choose(kernel_psi(*F, t), spec.b));
  const Bits ker = kernel_phi(*F, z);
  const Bits comp = ker.complement();
  const FieldElement skip = skipped_a(*F, t, z);
  for (std::uint32_t a = 1; a < F->order(); ++a) {
    if (a == skip.index) continue;
    S.set_gamma(FieldElement{a}, spec.gamma_at(FieldElement{a}) == Choice::Ker ? ker : comp);
  }
  return S;
}

CentralSet build_ds_z(const FieldPtr& F, SubfieldElement z, const VariantSpec& spec) {
  require_ds_field(*F);
  require_nonzero(z, *F);
  CentralSet S(F);
  const Bits ker = kernel_phi(*F, z);
  const Bits comp = ker.complement();
  for (std::uint32_t a = 1; a < F->order(); ++a)
    S.set_gamma(FieldElement{a}, spec.gamma_at(FieldElement{a}) == Choice::Ker ? ker : comp);
  return S;
}

// ---- linking systems ---------------------------------------------------------

ThirdSet linking_third(const Field& F, SubfieldElement z, const LinkSpec& sz, SubfieldElement zp,
                       const LinkSpec& szp) {
  require_ds_field(F);
  require_nonzero(z, F);
  require_nonzero(zp, F);
  if (z == zp) throw Error(Errc::EqualZ, "linking pairs need z != z'");
  const QuadAux aux(F, QReading::PlusOne);
  const SubfieldElement u0 = aux.u0();
  const auto [d, u1] = aux.split(F.sqrt_subfield(z));
  const auto [dp, u1p] = aux.split(F.sqrt_subfield(zp));
  SubfieldElement arg = F.sub_mul(u1, u1p);
  if (dp) arg = F.sub_add(arg, F.sub_mul(u0, u1));
  if (d) arg = F.sub_add(arg, F.sub_mul(u0, u1p));
  const std::uint32_t parity = (dp + d * dp + F.trace_e(arg)) & 1u;
  const int eta = -sz.eta() * szp.eta();
  const int eps = -sz.eps() * szp.eps() * (parity ? -1 : 1);
  return {F.sub_add(z, zp), LinkSpec{choice_of_sign(eta), choice_of_sign(eps)}};
}

CentralSet LinkingFamily::member(SubfieldElement z, const LinkSpec& s) const {
  return t ? build_ds_tz(field, *t, z, s.variant()) : build_ds_z(field, z, s.variant());
}

ThirdSet LinkingFamily::third_spec(std::size_t i, std::size_t j) const {
  return linking_third(*field, zs.at(i), specs.at(i), zs.at(j), specs.at(j));
}

CentralSet LinkingFamily::third(std::size_t i, std::size_t j) const {
  const ThirdSet th = third_spec(i, j);
  return member(th.z, th.spec);
}

namespace {

LinkingFamily build_linking(const FieldPtr& F, std::optional<FieldElement> t, const std::vector<LinkSpec>& specs) {
  require_ds_field(*F);
  if (t) require_nonzero(*t, "t");
  const std::uint32_t n = F->sub_order() - 1;
  if (specs.size() > 1 && specs.size() != n)
    throw Error(Errc::InvalidArgument, "need one link spec per z in F_{2^e}^*");
  LinkingFamily fam;
  fam.field = F;
  fam.t = t;
  for (std::uint32_t zi = 1; zi <= n; ++zi) {
    fam.zs.push_back(SubfieldElement{zi});
    fam.specs.push_back(specs.empty() ? LinkSpec{} : specs.size() == 1 ? specs[0] : specs[zi - 1]);
    fam.sets.push_back(fam.member(fam.zs.back(), fam.specs.back()));
  }
  fam.degenerate = n < 2;
  return fam;
}

}  // namespace

LinkingFamily build_linking_Rt(const FieldPtr& F, FieldElement t, const std::vector<LinkSpec>& specs) {
  return build_linking(F, t, specs);
}

LinkingFamily build_linking_R(const FieldPtr& F, const std::vector<LinkSpec>& specs) {
  return build_linking(F, std::nullopt, specs);
}

// ---- partial difference sets ---------------------------------------------------

void require_pds_field(const Field& F) {
  if (F.p() == 2) throw Error(Errc::PreconditionViolated, "partial difference sets here need p odd");
  if (F.f() % 2 == 0) throw Error(Errc::PreconditionViolated, "partial difference sets need f odd");
  if (F.f() % F.p() == 0) throw Error(Errc::PreconditionViolated, "partial difference sets need p not dividing f");
  if (F.m() % 2 == 0) throw Error(Errc::PreconditionViolated, "partial difference sets need m odd");
}

CentralSet build_pds_tz(const FieldPtr& F, FieldElement t, std::optional<SubfieldElement> zreq) {
  require_pds_field(*F);
  require_nonzero(t, "t");
  if (!F->is_square(t)) throw Error(Errc::NoSquareRepresentative, "t must be a nonzero square");
  const SubfieldElement z = F->find_z(zreq);
  CentralSet S(F);
  S.set_B(kernel_psi(*F, t).complement());
  const FieldElement base = skipped_a(*F, t, z);
  std::vector<bool> on_line(F->order(), false);
  for (std::uint32_t c = 1; c < F->p(); ++c) on_line[F->mul(base, F->scalar(c)).index] = true;
  const Bits ker = kernel_phi(*F, z);
  for (std::uint32_t a = 1; a < F->order(); ++a)
    if (!on_line[a]) S.set_gamma(FieldElement{a}, ker);
  return S;
}

namespace {

CentralSet pds_uniform(const FieldPtr& F, std::optional<SubfieldElement> zreq, bool full_b, bool comp_gamma) {
  require_pds_field(*F);
  const SubfieldElement z = F->find_z(zreq);
  CentralSet S(F);
  if (full_b) {
    Bits b(F->order(), true);
    b.set(0, false);
    S.set_B(std::move(b));
  }
  const Bits g = comp_gamma ? kernel_phi(*F, z).complement() : kernel_phi(*F, z);
  for (std::uint32_t a = 1; a < F->order(); ++a) S.set_gamma(FieldElement{a}, g);
  return S;
}

}  // namespace

CentralSet build_pds_z(const FieldPtr& F, std::optional<SubfieldElement> z) { return pds_uniform(F, z, false, false); }
CentralSet build_pds_z_prime(const FieldPtr& F, std::optional<SubfieldElement> z) { return pds_uniform(F, z, true, false); }
CentralSet build_pds_z_dprime(const FieldPtr& F, std::optional<SubfieldElement> z) { return pds_uniform(F, z, false, true); }

CentralSet complement_minus_identity(const CentralSet& S) {
  CentralSet R(S.field_ptr());
  Bits b = S.B().complement();
  b.set(0, false);
  R.set_B(std::move(b));
  for (std::uint32_t a = 1; a < S.field().order(); ++a)
    R.set_gamma(FieldElement{a}, S.gamma(FieldElement{a}).complement());
  return R;
}

// ---- m = f examples ------------------------------------------------------------

CentralSet build_example_mf(const FieldPtr& F, std::optional<FieldElement> t, Choice b,
                            const std::vector<FieldElement>& J0, const std::vector<FieldElement>& J1) {
  require_ds_field(*F);
  if (F->e() != 1) throw Error(Errc::PreconditionViolated, "the m = f examples need e = 1");
  if (t) require_nonzero(*t, "t");
  const std::uint32_t q = F->order();
  const std::uint32_t skip = t ? F->solve_a_v(*t).index : 0;
  std::vector<int> part(q, -1);
  auto place = [&](const std::vector<FieldElement>& J, int which) {
    for (FieldElement a : J) {
      if (a.index == 0 || a.index >= q) throw Error(Errc::BadPartition, "J entries must lie in F^*");
      if (a.index == skip) throw Error(Errc::BadPartition, "a_t must not appear in J0 or J1");
      if (part[a.index] != -1) throw Error(Errc::BadPartition, "J0 and J1 overlap or repeat an element");
      part[a.index] = which;
    }
  };
  place(J0, 0);
  place(J1, 1);
  for (std::uint32_t a = 1; a < q; ++a)
    if (a != skip && part[a] == -1) throw Error(Errc::BadPartition, "J0 and J1 do not cover the index set");

  CentralSet S(F);
  if (t) S.set_B(choose(kernel_psi(*F, *t), b));
  for (int which = 0; which < 2; ++which) {
    Bits g(F->sub_order());
    g.set(static_cast<std::size_t>(which));
    for (std::uint32_t a = 1; a < q; ++a)
      if (part[a] == which) S.set_gamma(FieldElement{a}, g);
  }
  return S;
}

std::optional<ExampleMatch> match_example_mf(const CentralSet& S) {
  const Field& F = S.field();
  if (F.p() != 2 || F.e() != 1) return std::nullopt;
  ExampleMatch m;
  std::optional<std::uint32_t> empty_a;
  for (std::uint32_t a = 1; a < F.order(); ++a) {
    const Bits& g = S.gamma(FieldElement{a});
    const std::size_t c = g.count();
    if (c == 0) {
      if (empty_a) return std::nullopt;
      empty_a = a;
    } else if (c == 1) {
      (g.test(0) ? m.J0 : m.J1).push_back(FieldElement{a});
    } else {
      return std::nullopt;
    }
  }
  if (S.B().none()) {
    if (empty_a) return std::nullopt;
    m.example = 5;
    return m;
  }
  if (!empty_a) return std::nullopt;
  for (std::uint32_t t = 1; t < F.order(); ++t) {
    const Bits ker = kernel_psi(F, FieldElement{t});
    Choice b;
    if (S.B() == ker) b = Choice::Ker;
    else if (S.B() == ker.complement()) b = Choice::Comp;
    else continue;
    if (F.solve_a_v(FieldElement{t}).index != *empty_a) return std::nullopt;
    m.example = 4;
    m.t = FieldElement{t};
    m.b = b;
    return m;
  }
  return std::nullopt;
}

// ---- Dillon form -----------------------------------------------------------------

DillonSpec dillon_spec_seeded(const FieldPtr& F, std::uint64_t seed) {
  if (F->p() != 2) throw Error(Errc::PreconditionViolated, "the Dillon form needs p = 2");
  const std::uint32_t q = F->order();
  DillonSpec spec;
  spec.q = 2;
  spec.d = F->m() - 1;
  spec.s = q - 1;
  for (std::uint32_t a = 0; a < q; ++a) spec.reps.push_back({FieldElement{a}, Field::zero()});
  for (std::uint32_t t = 1; t < q; ++t) spec.normals.push_back(FieldElement{t});
  // Fisher-Yates with a fixed rule so the permutation does not depend on the standard library.
  std::mt19937_64 rng(seed);
  for (std::size_t i = spec.normals.size(); i > 1; --i) std::swap(spec.normals[i - 1], spec.normals[rng() % i]);
  return spec;
}

std::vector<GroupElement> build_dillon(const Group& G, const DillonSpec& spec) {
  const Field& F = G.field();
  if (F.p() != 2 || spec.q != 2) throw Error(Errc::PreconditionViolated, "the Dillon form needs p = q = 2");
  const std::uint64_t expect_s = (std::uint64_t{1} << (spec.d + 1)) - 1;
  if (spec.d + 1 != F.m() || spec.s != expect_s)
    throw Error(Errc::InvalidArgument, "E = Z(G) has order 2^m, so d = m - 1 and s = 2^m - 1");
  if (spec.reps.size() != spec.s + 1 || spec.normals.size() != spec.s)
    throw Error(Errc::InvalidArgument, "need s + 1 coset representatives and s hyperplanes");
  std::set<std::uint32_t> cos, norms;
  for (const auto& g : spec.reps) cos.insert(g.a.index);
  for (const auto& t : spec.normals) {
    if (t.index == 0 || t.index >= F.order()) throw Error(Errc::InvalidArgument, "hyperplane normals must be nonzero");
    norms.insert(t.index);
  }
  if (cos.size() != spec.reps.size()) throw Error(Errc::InvalidArgument, "coset representatives must lie in distinct cosets");
  if (norms.size() != spec.normals.size()) throw Error(Errc::InvalidArgument, "hyperplanes must be distinct");

  std::vector<GroupElement> out;
  for (std::uint64_t i = 1; i <= spec.s; ++i) {
    const FieldElement t = spec.normals[i - 1];
    for (std::uint32_t h = 0; h < F.order(); ++h)
      if (F.trace_m(F.mul(t, FieldElement{h})) == 0) out.push_back(G.mul(spec.reps[i], {Field::zero(), FieldElement{h}}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Normal vector of the F_2-hyperplane spanned by `gens`.
FieldElement hyperplane_normal(const Field& F, const std::vector<FieldElement>& gens) {
  for (std::uint32_t t = 1; t < F.order(); ++t) {
    bool ok = true;
    for (FieldElement g : gens)
      if (F.trace_m(F.mul(FieldElement{t}, g)) != 0) {
        ok = false;
        break;
      }
    if (ok) return FieldElement{t};
  }
  throw Error(Errc::NotDillonForm, "generators do not lie in a hyperplane");
}

}  // namespace

DillonWitness dillon_form_of(const Group& G, const CentralSet& ds, SubfieldElement z, std::optional<FieldElement> t) {
  const Field& F = G.field();
  require_ds_field(F);
  require_nonzero(z, F);
  if (!ds.field().same_as(F)) throw Error(Errc::ContextMismatch, "set and group use different fields");
  const Bits ker = kernel_phi(F, z);
  const Bits comp = ker.complement();
  std::vector<SubfieldElement> ker_elems;
  for (std::uint32_t x : ker.members()) ker_elems.push_back(SubfieldElement{x});
  const std::uint32_t d_out = comp.members().at(0);

  DillonWitness w;
  w.spec.q = 2;
  w.spec.d = F.m() - 1;
  w.spec.s = F.order() - 1;
  std::optional<GroupElement> omitted;

  if (t) {
    require_nonzero(*t, "t");
    const Bits kt = kernel_psi(F, *t);
    if (ds.B() == kt) w.spec.reps.push_back({Field::zero(), Field::zero()});
    else if (ds.B() == kt.complement()) w.spec.reps.push_back({Field::zero(), FieldElement{kt.complement().members().at(0)}});
    else throw Error(Errc::NotDillonForm, "B is neither Ker(psi_t) nor its complement");
    w.spec.normals.push_back(*t);
    w.coset_a.push_back(Field::zero());
  } else {
    if (!ds.B().none()) throw Error(Errc::NotDillonForm, "B must be empty without t");
    omitted = GroupElement{};
  }

  for (std::uint32_t ai = 1; ai < F.order(); ++ai) {
    const FieldElement a{ai};
    const Bits& g = ds.gamma(a);
    const ImageDecomposition& dec = F.decomposition(a);
    if (g.none()) {
      if (omitted) throw Error(Errc::NotDillonForm, "more than one coset is left out");
      omitted = GroupElement{a, Field::zero()};
      continue;
    }
    GroupElement rep{a, Field::zero()};
    if (g == comp) rep.b = F.mul(dec.j, F.embed(SubfieldElement{d_out}));
    else if (g != ker) throw Error(Errc::NotDillonForm, "Gamma(a) is neither Ker(phi_z) nor its complement");
    std::vector<FieldElement> gens = dec.image_basis;
    for (SubfieldElement k : ker_elems) gens.push_back(F.mul(dec.j, F.embed(k)));
    w.spec.reps.push_back(rep);
    w.spec.normals.push_back(hyperplane_normal(F, gens));
    w.coset_a.push_back(a);
  }
  if (!omitted) throw Error(Errc::NotDillonForm, "no coset is left out");
  w.spec.reps.insert(w.spec.reps.begin(), *omitted);

  std::vector<GroupElement> built;
  try {
    built = build_dillon(G, w.spec);
  } catch (const Error& e) {
    throw Error(Errc::NotDillonForm, e.what());
  }
  if (built != ds.elements(G)) throw Error(Errc::NotDillonForm, "element sets differ");
  w.elements = built.size();
  return w;
}

}  // namespace suzuki

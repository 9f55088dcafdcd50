#include "suzuki/characters.hpp"

#include <numeric>

#include "suzuki/parallel.hpp"

namespace suzuki {

const char* table_kind_name(TableKind k) noexcept {
  switch (k) {
    case TableKind::FTwo: return "f=2";
    case TableKind::EvenF: return "f>2 even";
    case TableKind::OddFTwo: return "p=2, f odd";
    case TableKind::OddFOdd: return "p odd, f odd";
  }
  return "?";
}

const char* char_family_name(CharFamily f) noexcept {
  switch (f) {
    case CharFamily::F2Lin: return "F2Lin";
    case CharFamily::F2NonLin: return "F2NonLin";
    case CharFamily::EvenLin: return "EvenLin";
    case CharFamily::EvenMid: return "EvenMid";
    case CharFamily::OddLin2: return "OddLin2";
    case CharFamily::OddNonLin2: return "OddNonLin2";
    case CharFamily::OddLinP: return "OddLinP";
    case CharFamily::OddNonLinP: return "OddNonLinP";
  }
  return "?";
}

namespace {

std::int64_t ipow(std::int64_t b, std::uint32_t k) {
  std::int64_t r = 1;
  while (k--) r = checked_mul(r, b);
  return r;
}

}  // namespace

// ---- QuadAux ---------------------------------------------------------------

QuadAux::QuadAux(const Field& F, QReading reading) : F_(&F) {
  if (F.p() != 2) throw Error(Errc::PreconditionViolated, "quadratic form helpers need p = 2");
  const std::uint32_t e = F.e(), qe = F.sub_order();
  for (std::uint32_t s = 0; s < qe; ++s) {
    if (F.trace_e(SubfieldElement{s}) == 1) {
      u0_ = {s};
      break;
    }
  }
  if (e % 2 == 0) {
    const std::uint64_t half = std::uint64_t{1} << (e / 2);
    bool found = false;
    for (std::uint32_t s = 0; s < qe && !found; ++s) {
      const SubfieldElement c{s};
      if (F.sub_add(c, F.sub_pow(c, half)) == F.sub_scalar(1)) {
        c_ = c;
        found = true;
      }
    }
    if (!found) throw Error(Errc::NoSolution, "no c with c + c^{2^{e/2}} = 1");
  }
  q_.assign(qe, 0);
  for (std::uint32_t s = 0; s < qe; ++s) {
    const SubfieldElement x{s};
    std::uint32_t acc = 0;
    const std::uint32_t terms = e % 2 ? (e - 1) / 2 + 1 : e / 2;
    for (std::uint32_t k = 0; k < terms; ++k) acc += F.trace_e(F.sub_pow(x, (std::uint64_t{1} << k) + 1));
    if (e % 2 == 0) {
      const std::uint64_t E = reading == QReading::PlusOne ? (std::uint64_t{1} << (e / 2)) + 1
                                                            : std::uint64_t{1} << (e / 2 + 1);
      acc += F.trace_e(F.sub_mul(c_, F.sub_pow(x, E)));
    }
    q_[s] = static_cast<std::uint8_t>(acc & 1u);
  }
}

std::pair<std::uint32_t, SubfieldElement> QuadAux::split(SubfieldElement u) const {
  const std::uint32_t delta = F_->trace_e(u);
  return {delta, delta ? F_->sub_add(u, u0_) : u};
}

// ---- CharacterTable ----------------------------------------------------------

CharacterTable::CharacterTable(FieldPtr field, TableOptions opts) : field_(std::move(field)), opts_(opts) {
  const Field& F = *field_;
  const std::uint32_t p = F.p(), m = F.m(), e = F.e(), f = F.f();
  const std::uint64_t q = F.order(), qe = F.sub_order();
  if (f == 2) kind_ = TableKind::FTwo;
  else if (f % 2 == 0) kind_ = TableKind::EvenF;
  else if (p == 2) kind_ = TableKind::OddFTwo;
  else if (f % p == 0)
    throw Error(Errc::UnsupportedFamily, "no character table for p odd with p | f");
  else kind_ = TableKind::OddFOdd;

  N_ = p == 2 ? (kind_ == TableKind::OddFTwo ? 4 : 2) : p;

  switch (kind_) {
    case TableKind::FTwo:
      deg_nonlinear_ = static_cast<std::int64_t>(qe);
      for (std::uint32_t v = 0; v < q; ++v)
        if (!F.to_subfield(FieldElement{v})) non_subfield_.push_back({v});
      count_ = q * qe + non_subfield_.size();
      break;
    case TableKind::EvenF: {
      deg_nonlinear_ = ipow(p, m / 2);
      T_ = F.coset_reps_T(false);
      const std::uint64_t g = std::gcd<std::uint64_t>(ipow(p, e) + 1, q - 1);
      for (auto t : T_)
        if (F.log(t) % g != 0) j1_.push_back(t);
      count_ = q + j1_.size() * (p - 1);
      omitted_degree_ = static_cast<std::uint64_t>(ipow(p, (m - 2 * e) / 2));
      const std::uint64_t listed_sq = q + j1_.size() * (p - 1) * static_cast<std::uint64_t>(deg_nonlinear_ * deg_nonlinear_);
      const std::uint64_t rest = q * q - listed_sq;
      omitted_count_ = rest / (omitted_degree_ * omitted_degree_);
      break;
    }
    case TableKind::OddFTwo:
      deg_nonlinear_ = ipow(2, (m - e) / 2);
      quad_.emplace(F, opts_.q_reading);
      count_ = q + (q - 1) * qe;
      break;
    case TableKind::OddFOdd:
      deg_nonlinear_ = ipow(p, (m - e) / 2);
      T_ = F.coset_reps_T(false);
      half_ = (p + 1) / 2;
      f_mod_p_ = f % p;
      count_ = q + (q - 1) * qe;
      break;
  }
}

const std::vector<FieldElement>& CharacterTable::T() const { return T_; }

CharId CharacterTable::at(std::uint64_t idx) const {
  if (idx >= count_) throw Error(Errc::InvalidArgument, "character index out of range");
  const Field& F = *field_;
  const std::uint64_t q = F.order(), qe = F.sub_order(), p = F.p();
  CharId c;
  switch (kind_) {
    case TableKind::FTwo:
      if (idx < q * qe) {
        c.family = CharFamily::F2Lin;
        c.v = {static_cast<std::uint32_t>(idx / qe)};
        c.w = static_cast<std::uint32_t>(idx % qe);
      } else {
        c.family = CharFamily::F2NonLin;
        c.v = non_subfield_[idx - q * qe];
      }
      return c;
    case TableKind::EvenF:
      if (idx < q) {
        c.family = CharFamily::EvenLin;
        c.v = {static_cast<std::uint32_t>(idx)};
      } else {
        const std::uint64_t r = idx - q;
        c.family = CharFamily::EvenMid;
        c.v = j1_[r / (p - 1)];
        c.s = static_cast<std::int32_t>(r % (p - 1) + 1);
      }
      return c;
    case TableKind::OddFTwo:
      if (idx < q) {
        c.family = CharFamily::OddLin2;
        c.v = {static_cast<std::uint32_t>(idx)};
      } else {
        const std::uint64_t r = idx - q;
        c.family = CharFamily::OddNonLin2;
        c.v = {static_cast<std::uint32_t>(r / qe + 1)};
        const std::uint64_t rem = r % qe;
        c.w = static_cast<std::uint32_t>(rem / 2 * 2);  // coset {w, w+1}: even index
        c.s = rem % 2 ? -1 : 1;
      }
      return c;
    case TableKind::OddFOdd:
      if (idx < q) {
        c.family = CharFamily::OddLinP;
        c.v = {static_cast<std::uint32_t>(idx)};
      } else {
        const std::uint64_t r = idx - q;
        const std::uint64_t block = qe * (p - 1);
        c.family = CharFamily::OddNonLinP;
        c.v = T_[r / block];
        c.w = static_cast<std::uint32_t>((r % block) / (p - 1));
        c.s = static_cast<std::int32_t>(r % (p - 1) + 1);
      }
      return c;
  }
  return c;
}

std::vector<CharId> CharacterTable::all() const {
  std::vector<CharId> out;
  out.reserve(count_);
  for (std::uint64_t i = 0; i < count_; ++i) out.push_back(at(i));
  return out;
}

std::int64_t CharacterTable::degree(const CharId& chi) const {
  return is_linear(chi) ? 1 : deg_nonlinear_;
}

bool CharacterTable::is_linear(const CharId& chi) const noexcept {
  switch (chi.family) {
    case CharFamily::F2Lin:
    case CharFamily::EvenLin:
    case CharFamily::OddLin2:
    case CharFamily::OddLinP:
      return true;
    default:
      return false;
  }
}

bool CharacterTable::is_trivial(const CharId& chi) const noexcept {
  return is_linear(chi) && chi.v.index == 0 && chi.w == 0;
}

void CharacterTable::validate(const CharId& chi) const {
  const Field& F = *field_;
  auto bad = [&](const char* why) { throw Error(Errc::InvalidArgument, std::string("character: ") + why); };
  if (chi.v.index >= F.order() || chi.w >= F.sub_order()) bad("parameter out of range");
  switch (chi.family) {
    case CharFamily::F2Lin:
    case CharFamily::F2NonLin:
      if (kind_ != TableKind::FTwo) bad("family does not belong to this table");
      if (chi.family == CharFamily::F2NonLin && F.to_subfield(chi.v)) bad("v must lie outside F_{p^e}");
      break;
    case CharFamily::EvenLin:
    case CharFamily::EvenMid:
      if (kind_ != TableKind::EvenF) bad("family does not belong to this table");
      if (chi.family == CharFamily::EvenMid &&
          (chi.s < 1 || chi.s >= static_cast<std::int32_t>(F.p()) ||
           std::find(j1_.begin(), j1_.end(), chi.v) == j1_.end()))
        bad("EvenMid needs v in J_1' and 1 <= s < p");
      break;
    case CharFamily::OddLin2:
    case CharFamily::OddNonLin2:
      if (kind_ != TableKind::OddFTwo) bad("family does not belong to this table");
      if (chi.family == CharFamily::OddNonLin2 && (chi.v.index == 0 || (chi.s != 1 && chi.s != -1) || chi.w % 2))
        bad("OddNonLin2 needs v != 0, eps = +-1, w a coset representative");
      break;
    case CharFamily::OddLinP:
    case CharFamily::OddNonLinP:
      if (kind_ != TableKind::OddFOdd) bad("family does not belong to this table");
      if (chi.family == CharFamily::OddNonLinP &&
          (chi.s < 1 || chi.s >= static_cast<std::int32_t>(F.p()) ||
           !std::binary_search(T_.begin(), T_.end(), chi.v)))
        bad("OddNonLinP needs v in T and 1 <= s < p");
      break;
  }
}

FieldElement CharacterTable::a_of(FieldElement v) const { return field_->solve_a_v(v); }

std::uint32_t CharacterTable::trace_exp(FieldElement v, FieldElement x) const noexcept {
  const Field& F = *field_;
  const std::uint32_t t = F.trace_m(F.mul(v, x));
  return t * (N_ / (F.p() == 2 ? 2 : F.p()));
}

Monomial CharacterTable::generic_nonlinear_odd(const CharId& chi, FieldElement a, SubfieldElement x) const {
  const Field& F = *field_;
  const FieldElement av = a_of(chi.v);
  const auto u_opt = F.to_subfield(F.div(a, av));
  if (!u_opt || u_opt->index == 0) return {0, 0};
  const SubfieldElement u = *u_opt;
  if (kind_ == TableKind::OddFTwo) {
    const auto [delta, u1] = quad_->split(u);
    std::uint32_t sign = quad_->Q(u1);
    if (delta) sign += F.trace_e(F.sub_mul(quad_->u0(), u1));
    sign += F.trace_e(F.sub_mul(SubfieldElement{chi.w}, u1));
    sign += F.trace_e(F.sub_mul(F.sub_mul(u, u), x));
    std::uint32_t exp = QuadAux::kappa(delta) ? (chi.s > 0 ? 1u : 3u) : 0u;
    exp = (exp + 2 * (sign & 1u)) % 4;
    return {deg_nonlinear_, exp};
  }
  const std::uint32_t p = F.p();
  const SubfieldElement xv = F.subfield(F.x_v(chi.v));
  const SubfieldElement y = F.sub_mul(xv, F.sub_mul(u, u));
  const std::uint32_t sf = static_cast<std::uint32_t>(chi.s) * f_mod_p_ % p;
  std::uint64_t exp = p - (std::uint64_t{half_} * sf % p * F.trace_e(y)) % p;
  exp += F.trace_e(F.sub_mul(SubfieldElement{chi.w}, u));
  exp += std::uint64_t{sf} * F.trace_e(F.sub_mul(y, x));
  return {deg_nonlinear_, static_cast<std::uint32_t>(exp % p)};
}

Monomial CharacterTable::value_monomial(const CharId& chi, ClassId c) const {
  const Field& F = *field_;
  const std::uint32_t p = F.p();
  switch (chi.family) {
    case CharFamily::F2Lin: {
      const SubfieldElement w{chi.w};
      if (c.is_central()) {
        if (opts_.f2_reading == LinearF2Reading::Embedded) return {1, trace_exp(F.embed(w), c.b())};
        return {1, F.trace_e(F.sub_mul(w, F.trace_rel(c.b())))};
      }
      const SubfieldElement n = F.subfield(F.mul(c.a, F.theta(c.a)));
      const std::uint32_t t = F.trace_e(F.sub_mul(w, F.sub_add(c.x(), F.sub_neg(n))));
      return {1, (trace_exp(chi.v, c.a) + t) % N_};
    }
    case CharFamily::F2NonLin:
      if (!c.is_central()) return {0, 0};
      return {deg_nonlinear_, trace_exp(chi.v, c.b())};
    case CharFamily::EvenLin:
    case CharFamily::OddLin2:
    case CharFamily::OddLinP:
      if (c.is_central()) return {1, 0};
      return {1, trace_exp(chi.v, c.a)};
    case CharFamily::EvenMid:
      if (!c.is_central()) return {0, 0};
      return {deg_nonlinear_, trace_exp(F.mul(F.scalar(static_cast<std::uint32_t>(chi.s) % p), chi.v), c.b())};
    case CharFamily::OddNonLin2:
      if (c.is_central()) return {deg_nonlinear_, trace_exp(chi.v, c.b())};
      return generic_nonlinear_odd(chi, c.a, c.x());
    case CharFamily::OddNonLinP:
      if (c.is_central())
        return {deg_nonlinear_, trace_exp(F.mul(F.scalar(static_cast<std::uint32_t>(chi.s)), chi.v), c.b())};
      return generic_nonlinear_odd(chi, c.a, c.x());
  }
  return {0, 0};
}

CycInt CharacterTable::value(const CharId& chi, ClassId c) const {
  const Monomial mono = value_monomial(chi, c);
  RootSum r(N_);
  r.add(mono.exp, mono.coef);
  return r.value();
}

Monomial CharacterTable::omega_class(const CharId& chi, ClassId c) const {
  const Monomial mono = value_monomial(chi, c);
  const std::int64_t size = c.is_central() ? 1 : static_cast<std::int64_t>(field_->order() / field_->sub_order());
  const std::int64_t num = checked_mul(size, mono.coef);
  const std::int64_t deg = degree(chi);
  if (num % deg != 0)
    throw Error(Errc::InexactDivision, "|C| chi(C) not divisible by chi(1) for " + std::string(char_family_name(chi.family)));
  return {num / deg, mono.exp};
}

// acc += coef * sum_{b in B} zeta^{scale Tr_m(v b)}; odometer on the digits of b
// so each step costs O(1) amortized.
void CharacterTable::central_counts(FieldElement v, const Bits& B, RootSum& acc, std::int64_t coef) const {
  const Field& F = *field_;
  const std::uint32_t p = F.p(), m = F.m(), q = F.order();
  const auto w = F.trace_functional(v);
  std::vector<std::uint64_t> hist(p, 0);
  std::vector<std::uint32_t> digit(m, 0);
  std::uint32_t t = 0;
  for (std::uint32_t b = 0; b < q; ++b) {
    if (B.test(b)) ++hist[t];
    for (std::uint32_t i = 0; i < m; ++i) {
      t = (t + w[i]) % p;
      if (++digit[i] < p) break;
      digit[i] = 0;  // p steps of w[i] returned t to its value before this digit moved
    }
  }
  const std::uint32_t scale = N_ / (p == 2 ? 2 : p);
  for (std::uint32_t k = 0; k < p; ++k)
    if (hist[k]) acc.add(k * scale, checked_mul(coef, static_cast<std::int64_t>(hist[k])));
}

CycInt CharacterTable::omega(const CharId& chi, const CentralSet& S) const {
  const Field& F = *field_;
  if (!F.same_as(S.field())) throw Error(Errc::ContextMismatch, "set and table use different fields");
  const std::uint32_t q = F.order();
  const std::int64_t gsize = static_cast<std::int64_t>(q / F.sub_order());
  RootSum acc(N_);

  // central classes
  switch (chi.family) {
    case CharFamily::F2Lin:
      for (std::uint32_t b = 0; b < q; ++b) {
        if (!S.B().test(b)) continue;
        const Monomial mono = value_monomial(chi, ClassId::central(FieldElement{b}));
        acc.add(mono.exp, mono.coef);
      }
      break;
    case CharFamily::EvenLin:
    case CharFamily::OddLin2:
    case CharFamily::OddLinP:
      acc.add(0, static_cast<std::int64_t>(S.B().count()));
      break;
    case CharFamily::F2NonLin:
    case CharFamily::OddNonLin2:
      central_counts(chi.v, S.B(), acc, deg_nonlinear_);
      break;
    case CharFamily::EvenMid:
    case CharFamily::OddNonLinP:
      central_counts(F.mul(F.scalar(static_cast<std::uint32_t>(chi.s) % F.p()), chi.v), S.B(), acc, deg_nonlinear_);
      break;
  }

  // generic classes
  switch (chi.family) {
    case CharFamily::F2Lin:
      for (std::uint32_t a = 1; a < q; ++a) {
        const Bits& g = S.gamma(FieldElement{a});
        if (S.gamma_slot(FieldElement{a}) == 0) continue;
        for (std::uint32_t x = 0; x < g.size(); ++x) {
          if (!g.test(x)) continue;
          const Monomial mono = value_monomial(chi, ClassId::generic(FieldElement{a}, SubfieldElement{x}));
          acc.add(mono.exp, checked_mul(gsize, mono.coef));
        }
      }
      break;
    case CharFamily::EvenLin:
    case CharFamily::OddLin2:
    case CharFamily::OddLinP: {
      std::vector<std::int64_t> slot_count(S.palette().size());
      for (std::size_t i = 0; i < slot_count.size(); ++i) slot_count[i] = static_cast<std::int64_t>(S.palette()[i].count());
      for (std::uint32_t a = 1; a < q; ++a) {
        const auto cnt = slot_count[S.gamma_slot(FieldElement{a})];
        if (cnt) acc.add(trace_exp(chi.v, FieldElement{a}), checked_mul(gsize, cnt));
      }
      break;
    }
    case CharFamily::F2NonLin:
    case CharFamily::EvenMid:
      break;
    case CharFamily::OddNonLin2:
    case CharFamily::OddNonLinP: {
      const FieldElement av = a_of(chi.v);
      for (std::uint32_t u = 1; u < F.sub_order(); ++u) {
        const FieldElement a = F.mul(av, F.embed(SubfieldElement{u}));
        const Bits& g = S.gamma(a);
        if (S.gamma_slot(a) == 0) continue;
        for (std::uint32_t x = 0; x < g.size(); ++x) {
          if (!g.test(x)) continue;
          const Monomial mono = generic_nonlinear_odd(chi, a, SubfieldElement{x});
          acc.add(mono.exp, checked_mul(gsize, mono.coef));
        }
      }
      break;
    }
  }
  return acc.value().divided(degree(chi));
}

// ---- validation --------------------------------------------------------------

TableValidation validate_table(const CharacterTable& table, unsigned threads) {
  const Field& F = table.field();
  const Group G(table.field_ptr());
  TableValidation rep;
  rep.field = F.spec();
  rep.kind = table_kind_name(table.kind());
  rep.complete = table.complete();
  rep.listed = table.count();
  rep.class_count = G.class_count();
  rep.omitted = table.omitted_count();
  rep.omitted_degree = table.omitted_degree();

  const std::uint64_t nchar = table.count(), ncls = G.class_count();
  const std::uint32_t N = table.root_order();
  const std::int64_t order = static_cast<std::int64_t>(G.order());
  if (static_cast<double>(nchar) * static_cast<double>(ncls) > kMaxValidationEntries) {
    rep.failures.push_back("table too large to validate: " + std::to_string(nchar) + " x " + std::to_string(ncls));
    return rep;
  }
  std::vector<std::int64_t> sizes(ncls);
  std::vector<Monomial> M(nchar * ncls);
  const auto chars = table.all();
  parallel_for(nchar, threads, [&](std::uint64_t i, unsigned) {
    for (std::uint64_t c = 0; c < ncls; ++c) M[i * ncls + c] = table.value_monomial(chars[i], G.class_at(c));
  });
  for (std::uint64_t c = 0; c < ncls; ++c) sizes[c] = static_cast<std::int64_t>(G.class_size(G.class_at(c)));

  // first orthogonality over listed rows: sum_C |C| chi(C) conj(chi'(C))
  std::vector<std::string> row_fail(nchar);
  parallel_for(nchar, threads, [&](std::uint64_t i, unsigned) {
    for (std::uint64_t j = i; j < nchar; ++j) {
      RootSum r(N);
      for (std::uint64_t c = 0; c < ncls; ++c) {
        const Monomial &x = M[i * ncls + c], &y = M[j * ncls + c];
        if (!x.coef || !y.coef) continue;
        r.add((x.exp + N - y.exp) % N, checked_mul(sizes[c], checked_mul(x.coef, y.coef)));
      }
      const CycInt v = r.value();
      const std::int64_t want = i == j ? order : 0;
      if (!(v == CycInt::integer(1, want))) {
        row_fail[i] = "inner product of rows " + std::to_string(i) + "," + std::to_string(j) + " = " + v.str();
        return;
      }
    }
  });
  bool norms_ok = true, orth_ok = true;
  for (std::uint64_t i = 0; i < nchar; ++i) {
    if (row_fail[i].empty()) continue;
    rep.failures.push_back(row_fail[i]);
    // a failing diagonal entry is a norm failure
    if (row_fail[i].find("rows " + std::to_string(i) + "," + std::to_string(i) + " ") != std::string::npos) norms_ok = false;
    else orth_ok = false;
  }
  rep.first_orthogonality = orth_ok && norms_ok;
  rep.norms = norms_ok;

  // second orthogonality, complete tables only
  if (table.complete()) {
    std::vector<std::string> col_fail(ncls);
    parallel_for(ncls, threads, [&](std::uint64_t c, unsigned) {
      for (std::uint64_t d = c; d < ncls; ++d) {
        RootSum r(N);
        for (std::uint64_t i = 0; i < nchar; ++i) {
          const Monomial &x = M[i * ncls + c], &y = M[i * ncls + d];
          if (!x.coef || !y.coef) continue;
          r.add((x.exp + N - y.exp) % N, checked_mul(x.coef, y.coef));
        }
        const std::int64_t want = c == d ? order / sizes[c] : 0;
        const CycInt v = r.value();
        if (!(v == CycInt::integer(1, want))) {
          col_fail[c] = "column product " + std::to_string(c) + "," + std::to_string(d) + " = " + v.str();
          return;
        }
      }
    });
    rep.second_orthogonality = true;
    for (auto& s : col_fail) {
      if (s.empty()) continue;
      rep.failures.push_back(s);
      rep.second_orthogonality = false;
    }
  }

  // degree sum and count
  std::int64_t degsq = 0;
  for (const auto& chi : chars) degsq = checked_add(degsq, checked_mul(table.degree(chi), table.degree(chi)));
  if (table.complete()) {
    rep.degree_sum = degsq == order;
    rep.count_matches = nchar == ncls;
  } else {
    const std::int64_t od = static_cast<std::int64_t>(table.omitted_degree());
    const std::int64_t rest = order - degsq;
    rep.degree_sum = rest > 0 && rest % (od * od) == 0 &&
                     static_cast<std::uint64_t>(rest / (od * od)) == table.omitted_count();
    rep.count_matches = nchar + table.omitted_count() == ncls;
  }
  if (!rep.degree_sum) rep.failures.push_back("sum of squared degrees is " + std::to_string(degsq));
  if (!rep.count_matches) rep.failures.push_back("character count does not match class count");

  // omega is multiplicative on class sums
  if (G.order() <= 1024) {
    rep.omega_checked = true;
    std::vector<Monomial> W(nchar * ncls);
    for (std::uint64_t i = 0; i < nchar; ++i)
      for (std::uint64_t c = 0; c < ncls; ++c) W[i * ncls + c] = table.omega_class(chars[i], G.class_at(c));
    std::vector<std::vector<GroupElement>> elems(ncls);
    for (std::uint64_t c = 0; c < ncls; ++c) elems[c] = G.class_elements(G.class_at(c));
    std::vector<std::string> fail(ncls);
    parallel_for(ncls, threads, [&](std::uint64_t ci, unsigned) {
      std::vector<std::int64_t> hits(ncls);
      for (std::uint64_t cj = 0; cj < ncls && fail[ci].empty(); ++cj) {
        std::fill(hits.begin(), hits.end(), 0);
        for (auto g : elems[ci])
          for (auto h : elems[cj]) ++hits[G.class_index(G.class_of(G.mul(g, h)))];
        for (std::uint64_t k = 0; k < ncls; ++k) {
          if (hits[k] % sizes[k]) {
            fail[ci] = "class product not central";
            return;
          }
          hits[k] /= sizes[k];
        }
        for (std::uint64_t i = 0; i < nchar; ++i) {
          const Monomial &x = W[i * ncls + ci], &y = W[i * ncls + cj];
          RootSum lhs(N), rhs(N);
          lhs.add((x.exp + y.exp) % N, checked_mul(x.coef, y.coef));
          for (std::uint64_t k = 0; k < ncls; ++k)
            if (hits[k]) rhs.add(W[i * ncls + k].exp, checked_mul(hits[k], W[i * ncls + k].coef));
          if (!(lhs.value() == rhs.value())) {
            fail[ci] = "omega not multiplicative for character " + std::to_string(i) + " on classes " +
                       std::to_string(ci) + "," + std::to_string(cj);
            return;
          }
        }
      }
    });
    rep.omega_homomorphism = true;
    for (auto& s : fail) {
      if (s.empty()) continue;
      rep.failures.push_back(s);
      rep.omega_homomorphism = false;
    }
  }
  return rep;
}

}  // namespace suzuki

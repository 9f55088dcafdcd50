#include "suzuki/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace suzuki {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kEagerDecompositionLimit = 4096;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small
  std::uint64_t r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Dense polynomials over F_p, ascending coefficients.  Only used while
// building the tables, so clarity over speed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& mod, std::uint32_t p) {
  trim(a);
  const std::size_t dm = mod.size() - 1;
  const std::uint32_t lead_inv = inv_mod(mod.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + (p - c) * mod[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), mod, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& mod, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), mod, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    k >>= 1;
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test for a monic polynomial of degree m.
bool is_irreducible(const Poly& mod, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(mod.size() - 1);
  if (m == 1) return true;
  if (mod[0] == 0) return false;
  const Poly x{0, 1};
  // h[k] = x^{p^k} mod P
  std::vector<Poly> h(m + 1);
  h[0] = poly_mod(x, mod, p);
  for (std::uint32_t k = 1; k <= m; ++k) h[k] = poly_powmod(h[k - 1], p, mod, p);
  if (poly_sub(h[m], x, p) != Poly{}) return false;
  for (std::uint64_t r : prime_factors(m)) {
    Poly g = poly_gcd(mod, poly_sub(h[m / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> parse_uints(std::string_view s, char sep) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    std::string_view tok = s.substr(pos, next == std::string_view::npos ? s.npos : next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(Errc::ParseError, "bad integer '" + std::string(tok) + "'");
    out.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

// Gaussian elimination helpers over F_p on coefficient vectors.
struct Echelon {
  std::uint32_t p;
  std::vector<std::vector<std::uint32_t>> rows;  // reduced rows
  std::vector<std::uint32_t> pivots;

  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint32_t c = v[pivots[r]];
      if (!c) continue;
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<std::uint32_t>((v[i] + std::uint64_t{p - c} * rows[r][i]) % p);
    }
    return v;
  }

  bool insert(std::vector<std::uint32_t> v) {
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
    if (it == v.end()) return false;
    const auto piv = static_cast<std::uint32_t>(it - v.begin());
    const std::uint32_t s = inv_mod(v[piv], p);
    for (auto& c : v) c = static_cast<std::uint32_t>(std::uint64_t{c} * s % p);
    // keep rows fully reduced
    for (auto& row : rows) {
      const std::uint32_t c = row[piv];
      if (!c) continue;
      for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = static_cast<std::uint32_t>((row[i] + std::uint64_t{p - c} * v[i]) % p);
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }

  bool contains(const std::vector<std::uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; });
  }
};

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::uint32_t l) {
  std::shared_ptr<Field> f(new Field());
  f->build(p, m, l, std::nullopt);
  return f;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::uint32_t l,
                     std::vector<std::uint32_t> modulus) {
  std::shared_ptr<Field> f(new Field());
  f->build(p, m, l, std::move(modulus));
  return f;
}

FieldPtr Field::parse(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = spec.find(',', pos);
    parts.push_back(spec.substr(pos, next == spec.npos ? spec.npos : next - pos));
    if (next == spec.npos) break;
    pos = next + 1;
  }
  if (parts.size() != 3 && parts.size() != 4)
    throw Error(Errc::ParseError, "field spec must be 'p,m,l' or 'p,m,l,c0:...:cm', got '" +
                                      std::string(spec) + "'");
  const std::uint32_t p = parse_uints(parts[0], ',').at(0);
  const std::uint32_t m = parse_uints(parts[1], ',').at(0);
  const std::uint32_t l = parse_uints(parts[2], ',').at(0);
  if (parts.size() == 4) return make(p, m, l, parse_uints(parts[3], ':'));
  return make(p, m, l);
}

std::string Field::spec() const {
  std::ostringstream os;
  os << p_ << ',' << m_ << ',' << l_ << ',';
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? ":" : "") << modulus_[i];
  return os.str();
}

bool Field::same_as(const Field& o) const noexcept {
  return this == &o || (p_ == o.p_ && m_ == o.m_ && l_ == o.l_ && modulus_ == o.modulus_);
}

void Field::build(std::uint32_t p, std::uint32_t m, std::uint32_t l,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m < 2) throw Error(Errc::DegreeTooSmall, "extension degree must be at least 2");
  if (l == 0) throw Error(Errc::InvalidArgument, "Frobenius exponent l must be positive");
  p_ = p;
  m_ = m;
  l_ = l;
  e_ = std::gcd(l, m);
  f_ = m / e_;
  if (f_ == 1)
    throw Error(Errc::TrivialTheta, "gcd(l,m) = m, theta is the identity (abelian group)");

  std::uint64_t q = 1, qe = 1;
  pow_p_.assign(m + 1, 1);
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::FieldTooLarge, "p^m exceeds 2^22");
    pow_p_[i + 1] = static_cast<std::uint32_t>(q);
  }
  for (std::uint32_t i = 0; i < e_; ++i) qe *= p;
  q_ = static_cast<std::uint32_t>(q);
  qe_ = static_cast<std::uint32_t>(qe);

  auto digits = [&](std::uint32_t idx) {
    Poly d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      d[i] = idx % p_;
      idx /= p_;
    }
    return d;
  };
  auto index_of = [&](const Poly& d) {
    std::uint32_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) idx = idx * p_ + d[i];
    return idx;
  };

  // modulus
  if (modulus) {
    auto& mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1)
      throw Error(Errc::InvalidArgument, "modulus must be monic of degree m");
    for (auto c : mod)
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    if (!is_irreducible(mod, p)) throw Error(Errc::NotIrreducible, "modulus is reducible");
    modulus_ = mod;
  } else {
    for (std::uint32_t idx = 0; idx < q_; ++idx) {
      Poly cand = digits(idx);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        modulus_ = cand;
        break;
      }
    }
  }

  // primitive element
  const auto factors = prime_factors(q - 1);
  const Poly one_poly{1};
  for (std::uint32_t idx = 2; idx < q_; ++idx) {
    Poly g = digits(idx);
    trim(g);
    bool primitive = true;
    for (auto r : factors) {
      if (poly_powmod(g, (q - 1) / r, modulus_, p_) == one_poly) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gamma_ = {idx};
      break;
    }
  }

  // exp / log via the F_p-linear map "multiply by gamma"
  std::vector<Poly> gamma_cols(m_);
  {
    Poly g = digits(gamma_.index);
    trim(g);
    for (std::uint32_t i = 0; i < m_; ++i) {
      Poly xi(i + 1, 0);
      xi[i] = 1;
      Poly c = poly_mulmod(xi, g, modulus_, p_);
      c.resize(m_, 0);
      gamma_cols[i] = c;
    }
  }
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Poly cur(m_, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    const std::uint32_t idx = index_of(cur);
    exp_[k] = idx;
    log_[idx] = k;
    Poly next(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (!cur[i]) continue;
      for (std::uint32_t r = 0; r < m_; ++r) next[r] += cur[i] * gamma_cols[i][r];
    }
    for (auto& c : next) c %= p_;
    cur = std::move(next);
  }

  if (p_ != 2) {
    zech_.assign(q_ - 1, kNone);
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      FieldElement s = digit_add(one(), FieldElement{exp_[k]});
      zech_[k] = s.index == 0 ? kNone : log_[s.index];
    }
  }

  // theta
  std::uint64_t pl = 1;
  for (std::uint32_t i = 0; i < l_; ++i) pl = pl * p_ % (q - 1);
  theta_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a)
    theta_[a] = exp_[static_cast<std::uint32_t>(std::uint64_t{log_[a]} * pl % (q - 1))];

  // absolute trace: linear in the coefficient vector
  basis_trace_.assign(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    FieldElement xi{pow_p_[i]}, conj = xi, acc = zero();
    for (std::uint32_t k = 0; k < m_; ++k) {
      acc = add(acc, conj);
      conj = pow(conj, p_);
    }
    basis_trace_[i] = acc.index;  // lies in F_p, so its index is < p
  }
  trace_m_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t idx = a, t = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      t += (idx % p_) * basis_trace_[i];
      idx /= p_;
    }
    trace_m_[a] = static_cast<std::uint8_t>(t % p_);
  }

  // subfield F_{p^e}
  const FieldElement beta{exp_[(q_ - 1) / (qe_ - 1)]};
  std::vector<FieldElement> beta_pows(e_);
  beta_pows[0] = one();
  for (std::uint32_t k = 1; k < e_; ++k) beta_pows[k] = mul(beta_pows[k - 1], beta);
  sub_to_big_.assign(qe_, 0);
  big_to_sub_.assign(q_, -1);
  for (std::uint32_t s = 0; s < qe_; ++s) {
    std::uint32_t idx = s;
    FieldElement acc = zero();
    for (std::uint32_t k = 0; k < e_; ++k) {
      acc = add(acc, mul(scalar(idx % p_), beta_pows[k]));
      idx /= p_;
    }
    sub_to_big_[s] = acc.index;
    big_to_sub_[acc.index] = static_cast<std::int32_t>(s);
  }
  trace_e_.assign(qe_, 0);
  for (std::uint32_t s = 0; s < qe_; ++s) {
    FieldElement y{sub_to_big_[s]}, conj = y, acc = zero();
    for (std::uint32_t k = 0; k < e_; ++k) {
      acc = add(acc, conj);
      conj = pow(conj, p_);
    }
    trace_e_[s] = static_cast<std::uint8_t>(acc.index);
  }

  if (f_ == 2) {
    for (std::uint32_t j = 0; j < q_; ++j) {
      if (add(FieldElement{j}, theta(FieldElement{j})) == one()) {
        shared_j_ = {j};
        break;
      }
    }
  }

  norm_preimage_.assign(q_, kNone);
  for (std::uint32_t a = 1; a < q_; ++a) {
    const FieldElement n = mul(FieldElement{a}, theta(FieldElement{a}));
    if (norm_preimage_[n.index] == kNone) norm_preimage_[n.index] = a;
  }

  if (q_ <= kEagerDecompositionLimit) {
    decomp_.resize(q_);
    for (std::uint32_t a = 1; a < q_; ++a) decomp_[a] = compute_decomposition(FieldElement{a});
  }
}

FieldElement Field::digit_add(FieldElement a, FieldElement b) const noexcept {
  std::uint32_t x = a.index, y = b.index, r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return {r};
}

FieldElement Field::scalar(std::uint32_t c) const {
  if (c >= p_) throw Error(Errc::InvalidArgument, "scalar out of range");
  return {c};
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) throw Error(Errc::InvalidArgument, "element index out of range");
  return {index};
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > m_) throw Error(Errc::InvalidArgument, "too many coefficients");
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(Errc::InvalidArgument, "coefficient out of range");
    idx = idx * p_ + coeffs[i];
  }
  return {idx};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> d(m_);
  std::uint32_t idx = a.index;
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = idx % p_;
    idx /= p_;
  }
  return d;
}

FieldElement Field::add(FieldElement a, FieldElement b) const noexcept {
  if (p_ == 2) return {a.index ^ b.index};
  if (a.index == 0) return b;
  if (b.index == 0) return a;
  const std::uint32_t n = q_ - 1;
  const std::uint32_t la = log_[a.index], lb = log_[b.index];
  const std::uint32_t z = zech_[(lb + n - la) % n];
  if (z == kNone) return zero();
  return {exp_[(la + z) % n]};
}

FieldElement Field::neg(FieldElement a) const noexcept {
  if (p_ == 2 || a.index == 0) return a;
  const std::uint32_t n = q_ - 1;
  return {exp_[(log_[a.index] + n / 2) % n]};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const noexcept {
  if (a.index == 0 || b.index == 0) return zero();
  return {exp_[(log_[a.index] + log_[b.index]) % (q_ - 1)]};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.index == 0) throw Error(Errc::ZeroParameter, "inverse of zero");
  const std::uint32_t n = q_ - 1;
  return {exp_[(n - log_[a.index]) % n]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t k) const noexcept {
  if (k == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t n = q_ - 1;
  return {exp_[static_cast<std::uint32_t>((std::uint64_t{log_[a.index]} * (k % n)) % n)]};
}

std::uint32_t Field::log(FieldElement a) const {
  if (a.index == 0) throw Error(Errc::ZeroParameter, "log of zero");
  return log_[a.index];
}

bool Field::is_square(FieldElement a) const {
  if (a.index == 0) throw Error(Errc::ZeroParameter, "squareness of zero");
  return p_ == 2 || log_[a.index] % 2 == 0;
}

SubfieldElement Field::trace_rel(FieldElement a) const {
  FieldElement acc = a, conj = a;
  for (std::uint32_t k = 1; k < f_; ++k) {
    conj = theta(conj);
    acc = add(acc, conj);
  }
  return subfield(acc);
}

std::vector<std::uint32_t> Field::trace_functional(FieldElement v) const {
  std::vector<std::uint32_t> w(m_);
  for (std::uint32_t i = 0; i < m_; ++i) w[i] = trace_m(mul(v, FieldElement{pow_p_[i]}));
  return w;
}

std::optional<SubfieldElement> Field::to_subfield(FieldElement a) const noexcept {
  const std::int32_t s = big_to_sub_[a.index];
  if (s < 0) return std::nullopt;
  return SubfieldElement{static_cast<std::uint32_t>(s)};
}

SubfieldElement Field::subfield(FieldElement a) const {
  auto s = to_subfield(a);
  if (!s) throw Error(Errc::InvalidArgument, "element is not in the fixed subfield");
  return *s;
}

SubfieldElement Field::sub_element(std::uint32_t index) const {
  if (index >= qe_) throw Error(Errc::InvalidArgument, "subfield index out of range");
  return {index};
}

SubfieldElement Field::sub_add(SubfieldElement a, SubfieldElement b) const {
  return subfield(add(embed(a), embed(b)));
}
SubfieldElement Field::sub_neg(SubfieldElement a) const { return subfield(neg(embed(a))); }
SubfieldElement Field::sub_mul(SubfieldElement a, SubfieldElement b) const {
  return subfield(mul(embed(a), embed(b)));
}
SubfieldElement Field::sub_pow(SubfieldElement a, std::uint64_t k) const {
  return subfield(pow(embed(a), k));
}

std::vector<std::uint32_t> Field::sub_coeffs(SubfieldElement u) const {
  std::vector<std::uint32_t> d(e_);
  std::uint32_t idx = u.index;
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = idx % p_;
    idx /= p_;
  }
  return d;
}

bool Field::sub_is_square(SubfieldElement u) const {
  if (u.index == 0) return false;
  if (p_ == 2) return true;
  const std::uint32_t step = (q_ - 1) / (qe_ - 1);
  return (log_[embed(u).index] / step) % 2 == 0;
}

FieldElement Field::f_a_theta(FieldElement a, FieldElement x) const {
  if (a.index == 0) throw Error(Errc::ZeroParameter, "f_{a,theta} needs a != 0");
  return sub(mul(a, theta(x)), mul(x, theta(a)));
}

ImageDecomposition Field::compute_decomposition(FieldElement a) const {
  ImageDecomposition d;
  d.a = a;
  Echelon ech{p_, {}, {}};
  for (std::uint32_t i = 0; i < m_; ++i) {
    const FieldElement img = f_a_theta(a, FieldElement{pow_p_[i]});
    if (ech.insert(coeffs(img))) d.image_basis.push_back(img);
  }
  if (d.image_basis.size() != m_ - e_)
    throw Error(Errc::InvalidArgument, "Im(f_{a,theta}) is not a hyperplane");

  if (f_ == 2) {
    d.j = shared_j_;
  } else if (f_ % p_ != 0) {
    d.j = mul(a, theta(a));
  } else {
    for (std::uint32_t y = 1; y < q_; ++y) {
      if (!ech.contains(coeffs(FieldElement{y}))) {
        d.j = {y};
        break;
      }
    }
  }

  // columns: image basis, then j * beta^k; invert over F_p
  std::vector<std::vector<std::uint32_t>> cols;
  for (auto b : d.image_basis) cols.push_back(coeffs(b));
  for (std::uint32_t k = 0; k < e_; ++k) cols.push_back(coeffs(mul(d.j, embed(SubfieldElement{pow_p_[k]}))));
  const std::uint32_t n = m_;
  std::vector<std::vector<std::uint32_t>> aug(n, std::vector<std::uint32_t>(2 * n, 0));
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t c = 0; c < n; ++c) aug[r][c] = cols[c][r];
    aug[r][n + r] = 1;
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t piv = c;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) throw Error(Errc::InvalidArgument, "j_a lies in Im(f_{a,theta})");
    std::swap(aug[piv], aug[c]);
    const std::uint32_t s = inv_mod(aug[c][c], p_);
    for (auto& v : aug[c]) v = static_cast<std::uint32_t>(std::uint64_t{v} * s % p_);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const std::uint32_t t = aug[r][c];
      for (std::uint32_t k = 0; k < 2 * n; ++k)
        aug[r][k] = static_cast<std::uint32_t>((aug[r][k] + std::uint64_t{p_ - t} * aug[c][k]) % p_);
    }
  }
  d.inverse.assign(n * n, 0);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < n; ++c) d.inverse[r * n + c] = static_cast<std::uint8_t>(aug[r][n + c]);
  return d;
}

ImageDecomposition Field::image_and_j(FieldElement a) const {
  if (a.index == 0) throw Error(Errc::ZeroParameter, "image_and_j needs a != 0");
  if (!decomp_.empty()) return decomp_[a.index];
  return compute_decomposition(a);
}

const ImageDecomposition& Field::decomposition(FieldElement a) const {
  if (a.index == 0) throw Error(Errc::ZeroParameter, "decomposition needs a != 0");
  if (decomp_.empty())
    throw Error(Errc::TooLarge, "decomposition cache only exists for p^m <= 4096; use image_and_j");
  return decomp_[a.index];
}

Split Field::split(const ImageDecomposition& d, FieldElement y) const {
  const auto v = coeffs(y);
  std::uint32_t x = 0;
  for (std::uint32_t k = e_; k-- > 0;) {
    const std::uint32_t r = m_ - e_ + k;
    std::uint64_t acc = 0;
    for (std::uint32_t c = 0; c < m_; ++c) acc += std::uint64_t{d.inverse[r * m_ + c]} * v[c];
    x = x * p_ + static_cast<std::uint32_t>(acc % p_);
  }
  const SubfieldElement xs{x};
  return {xs, sub(y, mul(d.j, embed(xs)))};
}

Split Field::split(FieldElement a, FieldElement y) const {
  if (!decomp_.empty()) return split(decomposition(a), y);
  return split(image_and_j(a), y);
}

bool Field::in_image(FieldElement a, FieldElement y) const { return split(a, y).x.index == 0; }

FieldElement Field::j_of(FieldElement a) const {
  if (a.index == 0) throw Error(Errc::ZeroParameter, "j_a needs a != 0");
  if (f_ == 2) return shared_j_;
  if (f_ % p_ != 0) return mul(a, theta(a));
  return image_and_j(a).j;
}

SubfieldElement Field::x0() const {
  if (p_ == 2) throw Error(Errc::InvalidArgument, "x_0 is only defined for odd p");
  for (std::uint32_t s = 1; s < qe_; ++s)
    if (!sub_is_square(SubfieldElement{s})) return {s};
  throw Error(Errc::NoSolution, "no nonsquare in F_{p^e}");
}

FieldElement Field::x_v(FieldElement v) const {
  if (v.index == 0) throw Error(Errc::ZeroParameter, "x_v needs v != 0");
  if (p_ == 2) return one();
  return is_square(v) ? one() : embed(x0());
}

FieldElement Field::solve_a_v(FieldElement v) const {
  if (v.index == 0) throw Error(Errc::ZeroParameter, "a_v needs v != 0");
  if (f_ % 2 == 0) throw Error(Errc::PreconditionViolated, "a_v requires odd f");
  if (p_ != 2 && f_ % p_ == 0) throw Error(Errc::PreconditionViolated, "a_v requires p not dividing f");
  const FieldElement target = p_ == 2 ? inv(v) : mul(x_v(v), inv(v));
  const std::uint32_t a = norm_preimage_[target.index];
  if (a == kNone) throw Error(Errc::NoSolution, "a*theta(a) does not reach the target");
  return {a};
}

SubfieldElement Field::find_z(std::optional<SubfieldElement> requested) const {
  auto admissible = [&](SubfieldElement z) {
    if (z.index == 0 || z.index >= qe_) return false;
    if (p_ == 2) return true;
    return sub_is_square(z) && trace_e(z) == 0;
  };
  if (requested) {
    if (!admissible(*requested))
      throw Error(Errc::NoValidZ, "requested z is not admissible");
    return *requested;
  }
  for (std::uint32_t s = 1; s < qe_; ++s)
    if (admissible(SubfieldElement{s})) return {s};
  throw Error(Errc::NoValidZ, p_ == 2 ? "empty subfield" : "no nonzero square of F_{p^e} has zero trace");
}

SubfieldElement Field::sqrt_subfield(SubfieldElement z) const {
  if (p_ == 2) return sub_pow(z, std::uint64_t{1} << (e_ - 1));
  for (std::uint32_t s = 0; s < qe_; ++s)
    if (sub_mul(SubfieldElement{s}, SubfieldElement{s}) == z) return {s};
  throw Error(Errc::NoSolution, "z is not a square in F_{p^e}");
}

std::vector<FieldElement> Field::coset_reps_T(bool squares_only) const {
  if (p_ != 2 && squares_only && m_ % 2 == 0)
    throw Error(Errc::NoSquareRepresentative,
                "m even: cosets of F_p^* consisting of nonsquares have no square representative");
  std::vector<FieldElement> out;
  if (p_ == 2) {
    for (std::uint32_t a = 1; a < q_; ++a) out.push_back({a});
    return out;
  }
  const std::uint32_t ncos = (q_ - 1) / (p_ - 1);
  std::vector<bool> seen(ncos, false);
  for (std::uint32_t a = 1; a < q_; ++a) {
    const std::uint32_t key = log_[a] % ncos;
    if (seen[key]) continue;
    if (squares_only && log_[a] % 2 != 0) continue;
    seen[key] = true;
    out.push_back({a});
  }
  if (out.size() != ncos) throw Error(Errc::NoSquareRepresentative, "coset without representative");
  return out;
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::TrivialTheta: return "TrivialTheta";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NoValidZ: return "NoValidZ";
    case Errc::NoSquareRepresentative: return "NoSquareRepresentative";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::NotRationalInteger: return "NotRationalInteger";
    case Errc::Overflow: return "Overflow";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::OmittedCharacter: return "OmittedCharacter";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::EqualZ: return "EqualZ";
    case Errc::BadPartition: return "BadPartition";
    case Errc::NotDillonForm: return "NotDillonForm";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::NonCentralSetForCharacterMethod: return "NonCentralSetForCharacterMethod";
    case Errc::ParameterMismatch: return "ParameterMismatch";
  }
  return "Unknown";
}

}  // namespace suzuki

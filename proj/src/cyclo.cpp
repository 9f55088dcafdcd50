#include "suzuki/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace suzuki {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "int64 addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "int64 multiplication overflow");
  return r;
}

namespace {

std::size_t dimension(std::uint32_t n) {
  if (n == 1) return 1;
  if (n == 4) return 2;
  return n - 1;
}

void check_conductor(std::uint32_t n) {
  if (n == 1 || n == 4) return;
  if (n < 3) throw Error(Errc::InvalidArgument, "unsupported conductor " + std::to_string(n));
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) throw Error(Errc::InvalidArgument, "unsupported conductor " + std::to_string(n));
}

}  // namespace

CycInt::CycInt(std::uint32_t n) : n_(n) {
  check_conductor(n);
  c_.assign(dimension(n), 0);
}

CycInt CycInt::integer(std::uint32_t n, std::int64_t k) {
  CycInt r(n);
  r.c_[0] = k;
  return r;
}

CycInt CycInt::root(std::uint32_t n, std::uint64_t k) {
  CycInt r(n);
  if (n == 1) {
    r.c_[0] = 1;
  } else if (n == 4) {
    const auto e = k % 4;
    r.c_[e % 2] = e < 2 ? 1 : -1;
  } else {
    const auto e = k % n;
    if (e == n - 1) {
      for (auto& c : r.c_) c = -1;
    } else {
      r.c_[e] = 1;
    }
  }
  return r;
}

CycInt CycInt::from_coeffs(std::uint32_t n, std::vector<std::int64_t> coeffs) {
  CycInt r(n);
  if (coeffs.size() != r.c_.size())
    throw Error(Errc::InvalidArgument, "coefficient count does not match conductor");
  r.c_ = std::move(coeffs);
  return r;
}

CycInt CycInt::lift(std::uint32_t n) const {
  if (n == n_) return *this;
  if (n_ != 1) throw Error(Errc::ConductorMismatch, "cannot move between conductors " +
                                                      std::to_string(n_) + " and " + std::to_string(n));
  return integer(n, c_[0]);
}

void CycInt::normalize_conductor(std::uint32_t n) {
  if (n_ != n) *this = lift(n);
}

namespace {
std::uint32_t common(const CycInt& a, const CycInt& b) {
  if (a.conductor() == b.conductor()) return a.conductor();
  if (a.conductor() == 1) return b.conductor();
  if (b.conductor() == 1) return a.conductor();
  throw Error(Errc::ConductorMismatch, "conductors " + std::to_string(a.conductor()) + " and " +
                                           std::to_string(b.conductor()));
}
}  // namespace

CycInt CycInt::operator+(const CycInt& o) const {
  const auto n = common(*this, o);
  CycInt a = lift(n), b = o.lift(n);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = checked_add(a.c_[i], b.c_[i]);
  return a;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.c_) c = checked_mul(c, -1);
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator*(const CycInt& o) const {
  const auto n = common(*this, o);
  const CycInt a = lift(n), b = o.lift(n);
  if (n == 1) return integer(1, checked_mul(a.c_[0], b.c_[0]));
  if (n == 4) {
    CycInt r(4);
    r.c_[0] = checked_add(checked_mul(a.c_[0], b.c_[0]), -checked_mul(a.c_[1], b.c_[1]));
    r.c_[1] = checked_add(checked_mul(a.c_[0], b.c_[1]), checked_mul(a.c_[1], b.c_[0]));
    return r;
  }
  std::vector<std::int64_t> full(n, 0);
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    if (!a.c_[i]) continue;
    for (std::uint32_t j = 0; j + 1 < n; ++j) {
      if (!b.c_[j]) continue;
      auto& slot = full[(i + j) % n];
      slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
    }
  }
  CycInt r(n);
  for (std::uint32_t k = 0; k + 1 < n; ++k) r.c_[k] = checked_add(full[k], -full[n - 1]);
  return r;
}

CycInt CycInt::scaled(std::int64_t k) const {
  CycInt r = *this;
  for (auto& c : r.c_) c = checked_mul(c, k);
  return r;
}

CycInt CycInt::divided(std::int64_t k) const {
  if (k == 0) throw Error(Errc::InexactDivision, "division by zero");
  CycInt r = *this;
  for (auto& c : r.c_) {
    if (c % k != 0)
      throw Error(Errc::InexactDivision, str() + " is not divisible by " + std::to_string(k));
    c /= k;
  }
  return r;
}

CycInt CycInt::conj() const {
  if (n_ == 1) return *this;
  if (n_ == 4) {
    CycInt r = *this;
    r.c_[1] = checked_mul(r.c_[1], -1);
    return r;
  }
  // xi^k -> xi^{n-k}; expand with the full length-n vector then reduce
  std::vector<std::int64_t> full(n_, 0);
  full[0] = c_[0];
  for (std::uint32_t k = 1; k + 1 < n_; ++k) full[n_ - k] = c_[k];
  CycInt r(n_);
  for (std::uint32_t k = 0; k + 1 < n_; ++k) r.c_[k] = checked_add(full[k], -full[n_ - 1]);
  return r;
}

bool CycInt::is_zero() const noexcept {
  for (auto c : c_)
    if (c) return false;
  return true;
}

bool CycInt::is_integer() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

std::int64_t CycInt::as_integer() const {
  if (!is_integer()) throw Error(Errc::NotRationalInteger, str() + " is not a rational integer");
  return c_[0];
}

std::int64_t CycInt::norm_sq() const { return (*this * conj()).as_integer(); }

std::complex<double> CycInt::to_complex() const {
  if (n_ == 1) return {static_cast<double>(c_[0]), 0.0};
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < c_.size(); ++k)
    acc += static_cast<double>(c_[k]) * std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(n_));
  return acc;
}

bool CycInt::operator==(const CycInt& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  if (n_ == 1) return o.is_integer() && o.c_[0] == c_[0];
  if (o.n_ == 1) return is_integer() && c_[0] == o.c_[0];
  return false;
}

std::string CycInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k]) continue;
    if (!first) os << (c_[k] > 0 ? " + " : " - ");
    else if (c_[k] < 0) os << '-';
    const auto mag = c_[k] < 0 ? -c_[k] : c_[k];
    if (k == 0) os << mag;
    else {
      if (mag != 1) os << mag << '*';
      os << (n_ == 4 ? "i" : "z" + std::to_string(n_));
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

void RootSum::merge(const RootSum& o) {
  if (o.counts_.size() != counts_.size()) throw Error(Errc::ConductorMismatch, "root orders differ");
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] = checked_add(counts_[k], o.counts_[k]);
}

CycInt RootSum::value() const {
  const auto N = order();
  if (N == 1) return CycInt::integer(1, counts_[0]);
  if (N == 2) return CycInt::integer(1, checked_add(counts_[0], -counts_[1]));
  if (N == 4)
    return CycInt::from_coeffs(4, {checked_add(counts_[0], -counts_[2]), checked_add(counts_[1], -counts_[3])});
  std::vector<std::int64_t> c(N - 1);
  for (std::uint32_t k = 0; k + 1 < N; ++k) c[k] = checked_add(counts_[k], -counts_[N - 1]);
  return CycInt::from_coeffs(N, std::move(c));
}

}  // namespace suzuki

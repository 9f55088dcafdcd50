#pragma once

// Exact elements of Z[xi_n] for n in {1, 4, p}.  Power basis 1, xi, ...,
// xi^{phi(n)-1}; for prime n the relation xi^{n-1} = -(1 + ... + xi^{n-2})
// keeps the representation canonical.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "suzuki/error.hpp"

namespace suzuki {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

class CycInt {
 public:
  CycInt() : n_(1), c_{0} {}
  explicit CycInt(std::uint32_t n);                 // zero of conductor n
  static CycInt integer(std::uint32_t n, std::int64_t k);
  static CycInt root(std::uint32_t n, std::uint64_t k);  // xi_n^k
  static CycInt from_coeffs(std::uint32_t n, std::vector<std::int64_t> coeffs);

  std::uint32_t conductor() const noexcept { return n_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

  // A conductor-1 value lifts into conductor n; any other mismatch throws.
  CycInt lift(std::uint32_t n) const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
  CycInt scaled(std::int64_t k) const;
  // Divides every coefficient; throws InexactDivision if any is not a multiple.
  CycInt divided(std::int64_t k) const;
  CycInt conj() const;

  bool is_zero() const noexcept;
  bool is_integer() const noexcept;
  std::int64_t as_integer() const;  // NotRationalInteger
  std::int64_t norm_sq() const;     // x * conj(x); NotRationalInteger if not in Z
  std::complex<double> to_complex() const;

  bool operator==(const CycInt& o) const;
  std::string str() const;

 private:
  std::uint32_t n_;
  std::vector<std::int64_t> c_;
  void normalize_conductor(std::uint32_t n);
};

// Sum of terms c * zeta_N^k with N in {2, 4, p}; all character values in this
// library are of that shape, so sums are kept as per-exponent counts and
// converted once.
class RootSum {
 public:
  explicit RootSum(std::uint32_t order) : counts_(order, 0) {}
  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
  void add(std::uint32_t exponent, std::int64_t coef) {
    auto& c = counts_[exponent % counts_.size()];
    c = checked_add(c, coef);
  }
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  void merge(const RootSum& o);
  CycInt value() const;

 private:
  std::vector<std::int64_t> counts_;
};

// Conductor used for roots of unity of order N.
inline std::uint32_t conductor_for_order(std::uint32_t order) { return order == 2 ? 1 : order; }

}  // namespace suzuki

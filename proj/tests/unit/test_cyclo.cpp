#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "suzuki/cyclo.hpp"

using namespace suzuki;
using suzuki::testing::errc_of;

namespace {

std::complex<double> root_c(std::uint32_t n, std::uint64_t k) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k % n) / n);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("roots of unity evaluate to the complex roots") {
  for (std::uint32_t n : {4u, 3u, 5u, 7u})
    for (std::uint64_t k = 0; k < 2 * n; ++k) CHECK(close(CycInt::root(n, k).to_complex(), root_c(n, k)));
}

TEST_CASE("sum of all p-th roots vanishes") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CycInt s(p);
    for (std::uint32_t k = 0; k < p; ++k) s += CycInt::root(p, k);
    CHECK(s.is_zero());
    CHECK(s.is_integer());
    CHECK(s.as_integer() == 0);
  }
}

TEST_CASE("ring operations agree with complex arithmetic") {
  for (std::uint32_t n : {4u, 5u}) {
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) {
        const CycInt a = CycInt::root(n, i).scaled(3) + CycInt::integer(n, 2);
        const CycInt b = CycInt::root(n, j) - CycInt::root(n, i + 1);
        CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
        CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
        CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
        CHECK(a * b == b * a);
      }
  }
}

TEST_CASE("norm of a Gauss sum over F_p is p") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    CycInt g(p);
    for (std::uint32_t x = 1; x < p; ++x) {
      bool square = false;
      for (std::uint32_t y = 1; y < p; ++y) square |= (y * y) % p == x;
      g += CycInt::root(p, x).scaled(square ? 1 : -1);
    }
    CHECK(g.norm_sq() == static_cast<std::int64_t>(p));
  }
}

TEST_CASE("conductor 1 lifts, other mismatches throw") {
  const CycInt one = CycInt::integer(1, 1);
  CHECK((one + CycInt::root(5, 1)).conductor() == 5);
  CHECK(errc_of([] { (void)(CycInt::root(4, 1) + CycInt::root(5, 1)); }) == Errc::ConductorMismatch);
  CHECK(errc_of([] { (void)CycInt::root(5, 1).as_integer(); }) == Errc::NotRationalInteger);
  CHECK(errc_of([] { (void)CycInt::integer(5, 7).divided(2); }) == Errc::InexactDivision);
  CHECK(CycInt::integer(5, 8).divided(2) == CycInt::integer(5, 4));
}

TEST_CASE("checked integer arithmetic reports overflow") {
  CHECK(errc_of([] { checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40); }) == Errc::Overflow);
  CHECK(errc_of([] { checked_add(INT64_MAX, 1); }) == Errc::Overflow);
  CHECK(checked_add(2, 3) == 5);
}

TEST_CASE("RootSum collects exponents mod its order") {
  RootSum r(5);
  for (std::uint32_t k = 0; k < 10; ++k) r.add(k, 1);
  CHECK(r.value().is_zero());
  RootSum s(2);
  s.add(0, 3);
  s.add(1, 5);
  CHECK(s.value().as_integer() == -2);
  RootSum t(4);
  t.add(1, 2);
  t.add(3, 1);
  CHECK(close(t.value().to_complex(), std::complex<double>(0, 1)));
  RootSum u(4);
  u.add(2, 1);
  t.merge(u);
  CHECK(close(t.value().to_complex(), std::complex<double>(-1, 1)));
}

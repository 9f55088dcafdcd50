#pragma once

// Exact arithmetic in GF(p^m) together with the fixed field GF(p^e) of the
// Frobenius power theta(a) = a^(p^l).
//
// Elements are stored by their canonical index: the coefficient vector
// (c_0, ..., c_{m-1}) in the polynomial basis 1, x, ..., x^{m-1} maps to
// sum c_i p^i.  "Smallest" element always means smallest index.  Subfield
// elements are indexed the same way over the basis 1, beta, ..., beta^{e-1}
// where beta = gamma^((p^m-1)/(p^e-1)).

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "suzuki/error.hpp"

namespace suzuki {

struct FieldElement {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

struct SubfieldElement {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(SubfieldElement, SubfieldElement) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^m} = Im(f_{a,theta}) (+) j_a F_{p^e} for a fixed a != 0.
struct ImageDecomposition {
  FieldElement a;
  FieldElement j;
  std::vector<FieldElement> image_basis;  // F_p-basis, m - e vectors
  std::vector<std::uint8_t> inverse;      // m x m, row major, over F_p
};

struct Split {
  SubfieldElement x;
  FieldElement h;  // component in Im(f_{a,theta})
};

class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

  static FieldPtr make(std::uint32_t p, std::uint32_t m, std::uint32_t l);
  static FieldPtr make(std::uint32_t p, std::uint32_t m, std::uint32_t l,
                       std::vector<std::uint32_t> modulus);
  // "p,m,l" or "p,m,l,c0:c1:...:cm".
  static FieldPtr parse(std::string_view spec);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::string spec() const;
  bool same_as(const Field& other) const noexcept;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t l() const noexcept { return l_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t f() const noexcept { return f_; }
  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t sub_order() const noexcept { return qe_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  FieldElement gamma() const noexcept { return gamma_; }

  // ---- elements ----------------------------------------------------------
  static constexpr FieldElement zero() noexcept { return {0}; }
  static constexpr FieldElement one() noexcept { return {1}; }
  FieldElement scalar(std::uint32_t c) const;  // c * 1, c in [0, p)
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  FieldElement element(std::uint32_t index) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t k) const noexcept;
  FieldElement theta(FieldElement a) const noexcept { return {theta_[a.index]}; }
  FieldElement exp(std::uint64_t k) const noexcept { return {exp_[k % (q_ - 1)]}; }
  // Discrete log to base gamma; a must be nonzero.
  std::uint32_t log(FieldElement a) const;
  bool is_square(FieldElement a) const;  // a != 0

  // ---- traces ------------------------------------------------------------
  std::uint32_t trace_m(FieldElement a) const noexcept { return trace_m_[a.index]; }
  std::uint32_t trace_e(SubfieldElement u) const noexcept { return trace_e_[u.index]; }
  SubfieldElement trace_rel(FieldElement a) const;
  // Coefficients w_i = Tr_m(v x^i); Tr_m(v b) = sum_i b_i w_i (mod p).
  std::vector<std::uint32_t> trace_functional(FieldElement v) const;

  // ---- subfield ----------------------------------------------------------
  FieldElement embed(SubfieldElement u) const noexcept { return {sub_to_big_[u.index]}; }
  std::optional<SubfieldElement> to_subfield(FieldElement a) const noexcept;
  SubfieldElement subfield(FieldElement a) const;  // throws if a is not in F_{p^e}
  SubfieldElement sub_element(std::uint32_t index) const;
  SubfieldElement sub_add(SubfieldElement a, SubfieldElement b) const;
  SubfieldElement sub_neg(SubfieldElement a) const;
  SubfieldElement sub_mul(SubfieldElement a, SubfieldElement b) const;
  SubfieldElement sub_pow(SubfieldElement a, std::uint64_t k) const;
  SubfieldElement sub_scalar(std::uint32_t c) const { return subfield(scalar(c)); }
  std::vector<std::uint32_t> sub_coeffs(SubfieldElement u) const;
  bool sub_is_square(SubfieldElement u) const;  // nonzero square of F_{p^e}

  // ---- f_{a,theta} and the canonical solvers -----------------------------
  FieldElement f_a_theta(FieldElement a, FieldElement x) const;
  // Hyperplane Im(f_{a,theta}) with the canonical complement generator j_a.
  ImageDecomposition image_and_j(FieldElement a) const;
  const ImageDecomposition& decomposition(FieldElement a) const;  // cached when small
  Split split(const ImageDecomposition& d, FieldElement y) const;
  Split split(FieldElement a, FieldElement y) const;
  bool in_image(FieldElement a, FieldElement y) const;
  FieldElement j_of(FieldElement a) const;

  // p = 2: the a with a*theta(a) = v^{-1}.  p odd: the smallest a with
  // v*a*theta(a) = x_v.  Requires f odd and p not dividing f.
  FieldElement solve_a_v(FieldElement v) const;
  // Smallest nonsquare of F_{p^e} (p odd).
  SubfieldElement x0() const;
  FieldElement x_v(FieldElement v) const;

  SubfieldElement find_z(std::optional<SubfieldElement> requested = std::nullopt) const;
  SubfieldElement sqrt_subfield(SubfieldElement z) const;

  std::vector<FieldElement> coset_reps_T(bool squares_only) const;

 private:
  Field() = default;
  void build(std::uint32_t p, std::uint32_t m, std::uint32_t l,
             std::optional<std::vector<std::uint32_t>> modulus);
  FieldElement digit_add(FieldElement a, FieldElement b) const noexcept;
  ImageDecomposition compute_decomposition(FieldElement a) const;

  std::uint32_t p_ = 0, m_ = 0, l_ = 0, e_ = 0, f_ = 0;
  std::uint32_t q_ = 0, qe_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i <= m
  FieldElement gamma_{};

  std::vector<std::uint32_t> exp_;    // q - 1 entries
  std::vector<std::uint32_t> log_;    // q entries, log_[0] unused
  std::vector<std::uint32_t> zech_;   // log(1 + gamma^k), kNoLog when zero
  std::vector<std::uint32_t> theta_;
  std::vector<std::uint8_t> trace_m_;
  std::vector<std::uint32_t> basis_trace_;  // Tr_m(x^i)

  std::vector<std::uint32_t> sub_to_big_;
  std::vector<std::int32_t> big_to_sub_;
  std::vector<std::uint8_t> trace_e_;

  FieldElement shared_j_{};  // f = 2
  std::vector<std::uint32_t> norm_preimage_;  // smallest a with a*theta(a) = index
  std::vector<ImageDecomposition> decomp_;    // filled when q is small
};

}  // namespace suzuki

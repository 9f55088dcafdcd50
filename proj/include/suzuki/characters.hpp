#pragma once

// Irreducible characters of A_p(m, theta), one family per case:
//   f = 2                 linear chi^(v,w), degree p^e chi^v
//   f > 2 even            linear chi^v, degree p^{m/2} chi^(v,s)  (degree
//                         p^{(m-2e)/2} family not available; counted only)
//   p = 2, f odd          linear chi^v, degree 2^{(m-e)/2} chi^(v,w,eps)
//   p odd, f odd, p !| f  linear chi^v, degree p^{(m-e)/2} chi^(v,w,s)
//
// Every value is c * zeta_N^k with N = 2, 4 or p (Monomial below).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suzuki/central_set.hpp"
#include "suzuki/cyclo.hpp"
#include "suzuki/group.hpp"

namespace suzuki {

enum class TableKind { FTwo, EvenF, OddFTwo, OddFOdd };
const char* table_kind_name(TableKind k) noexcept;

enum class CharFamily : std::uint8_t { F2Lin, F2NonLin, EvenLin, EvenMid, OddLin2, OddNonLin2, OddLinP, OddNonLinP };
const char* char_family_name(CharFamily f) noexcept;

struct CharId {
  CharFamily family = CharFamily::OddLin2;
  FieldElement v;
  std::uint32_t w = 0;  // subfield index (F2Lin, OddNonLin2, OddNonLinP)
  std::int32_t s = 0;   // s in [1, p-1] (EvenMid, OddNonLinP) or eps = +-1 (OddNonLin2)
  friend constexpr auto operator<=>(const CharId&, const CharId&) = default;
};

struct Monomial {
  std::int64_t coef = 0;
  std::uint32_t exp = 0;
};

// Two readings of the quadratic form's correction term for even e:
// Tr_e(c x^{2^{e/2}+1}) or Tr_e(c x^{2^{e/2+1}}).
enum class QReading { PlusOne, Doubled };
// Two readings of the central value of the f = 2 linear characters:
// psi_w(b) with w embedded in F_{p^m}, or phi_w(Tr_rel(b)).
enum class LinearF2Reading { Embedded, RelativeTrace };

struct TableOptions {
  QReading q_reading = QReading::PlusOne;
  LinearF2Reading f2_reading = LinearF2Reading::RelativeTrace;
};

// Helpers of the p = 2, f odd table.
class QuadAux {
 public:
  QuadAux(const Field& F, QReading reading);
  SubfieldElement u0() const noexcept { return u0_; }
  SubfieldElement c() const noexcept { return c_; }  // even e only
  std::uint32_t Q(SubfieldElement x) const noexcept { return q_[x.index]; }
  // u = delta u0 + u1 with Tr_e(u1) = 0
  std::pair<std::uint32_t, SubfieldElement> split(SubfieldElement u) const;
  static std::uint32_t kappa(std::uint32_t delta) noexcept { return delta & 1u; }

 private:
  const Field* F_;
  SubfieldElement u0_{}, c_{};
  std::vector<std::uint8_t> q_;
};

class CharacterTable {
 public:
  explicit CharacterTable(FieldPtr field, TableOptions opts = {});

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  TableKind kind() const noexcept { return kind_; }
  const TableOptions& options() const noexcept { return opts_; }
  std::uint32_t root_order() const noexcept { return N_; }
  std::uint32_t conductor() const noexcept { return conductor_for_order(N_); }
  bool complete() const noexcept { return kind_ != TableKind::EvenF; }

  // Listed characters, trivial character first.
  std::uint64_t count() const noexcept { return count_; }
  CharId at(std::uint64_t idx) const;
  std::vector<CharId> all() const;
  std::uint64_t omitted_count() const noexcept { return omitted_count_; }
  std::uint64_t omitted_degree() const noexcept { return omitted_degree_; }

  std::int64_t degree(const CharId& chi) const;
  bool is_trivial(const CharId& chi) const noexcept;
  bool is_linear(const CharId& chi) const noexcept;
  void validate(const CharId& chi) const;

  Monomial value_monomial(const CharId& chi, ClassId c) const;
  CycInt value(const CharId& chi, ClassId c) const;
  // |C| chi(C) / chi(1), exact.
  Monomial omega_class(const CharId& chi, ClassId c) const;
  CycInt omega(const CharId& chi, const CentralSet& S) const;

  FieldElement a_of(FieldElement v) const;  // a_v (odd f only)
  const std::vector<FieldElement>& T() const;
  const std::vector<FieldElement>& J1prime() const noexcept { return j1_; }
  const QuadAux* quad() const noexcept { return quad_ ? &*quad_ : nullptr; }

 private:
  FieldPtr field_;
  TableOptions opts_;
  TableKind kind_;
  std::uint32_t N_;
  std::uint64_t count_ = 0, omitted_count_ = 0, omitted_degree_ = 0;
  std::int64_t deg_nonlinear_ = 1;
  std::uint32_t half_ = 0;       // 2^{-1} mod p
  std::uint32_t f_mod_p_ = 0;
  std::vector<FieldElement> non_subfield_;  // f = 2 nonlinear parameters
  std::vector<FieldElement> j1_;            // J_1'
  std::vector<FieldElement> T_;
  std::optional<QuadAux> quad_;

  std::uint32_t trace_exp(FieldElement v, FieldElement x) const noexcept;
  Monomial generic_nonlinear_odd(const CharId& chi, FieldElement a, SubfieldElement x) const;
  void central_counts(FieldElement v, const Bits& B, RootSum& acc, std::int64_t coef) const;
};

struct TableValidation {
  std::string field;
  std::string kind;
  bool complete = true;
  std::uint64_t listed = 0;
  std::uint64_t class_count = 0;
  std::uint64_t omitted = 0;
  std::uint64_t omitted_degree = 0;
  bool first_orthogonality = false;
  bool second_orthogonality = false;  // complete tables only
  bool norms = false;
  bool degree_sum = false;
  bool count_matches = false;
  bool omega_homomorphism = false;
  bool omega_checked = false;  // only at |G| <= 1024
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// Full validation holds every chi(C) in memory; larger tables are refused.
inline constexpr double kMaxValidationEntries = 1e7;
TableValidation validate_table(const CharacterTable& table, unsigned threads = 0);

}  // namespace suzuki

#pragma once

// Builders for the central difference sets (p = 2), their linking systems,
// the odd-p central partial difference sets, the m = f example families,
// and the translation of the p = 2 sets into McFarland/Dillon form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suzuki/central_set.hpp"
#include "suzuki/group.hpp"

namespace suzuki {

enum class Choice : std::uint8_t { Ker, Comp };
inline int sign_of(Choice c) noexcept { return c == Choice::Ker ? 1 : -1; }
inline Choice choice_of_sign(int s) noexcept { return s > 0 ? Choice::Ker : Choice::Comp; }

// Picks Ker(.) or its complement for B and for every Gamma(a).  `gamma`
// holds either one shared entry or one entry per field index (entry 0 unused).
struct VariantSpec {
  Choice b = Choice::Ker;
  std::vector<Choice> gamma{Choice::Ker};

  Choice gamma_at(FieldElement a) const { return gamma.size() == 1 ? gamma[0] : gamma.at(a.index); }
  bool shared() const noexcept { return gamma.size() == 1; }

  static VariantSpec all(Choice c) { return {c, {c}}; }
  // One mt19937_64 draw per decision, bit 0: first B, then Gamma(a) for
  // a = 1, ..., q-1 in index order.
  static VariantSpec seeded(std::uint64_t seed, std::uint32_t field_order);
  // "all-ker", "all-comp", "seed:<n>"
  static VariantSpec parse(const std::string& text, std::uint32_t field_order);
};

// ---- central difference sets, p = 2 ------------------------------------------

Bits kernel_psi(const Field& F, FieldElement t);         // {b : Tr_m(t b) = 0}
Bits kernel_phi(const Field& F, SubfieldElement z);      // {x : Tr_e(z x) = 0}

CentralSet build_ds_tz(const FieldPtr& F, FieldElement t, SubfieldElement z, const VariantSpec& spec);
CentralSet build_ds_z(const FieldPtr& F, SubfieldElement z, const VariantSpec& spec);

// ---- linking systems -----------------------------------------------------

// Per-member choice for linking-system sets (Gamma shared across a).
struct LinkSpec {
  Choice b = Choice::Ker;
  Choice gamma = Choice::Ker;
  int eta() const noexcept { return sign_of(b); }
  int eps() const noexcept { return sign_of(gamma); }
  VariantSpec variant() const { return {b, {gamma}}; }
};

struct ThirdSet {
  SubfieldElement z;  // z + z'
  LinkSpec spec;
};

// Sign rules for the set D'' with D_z D_{z'}^{(-1)} = (mu - eta) D'' + eta G.
ThirdSet linking_third(const Field& F, SubfieldElement z, const LinkSpec& sz, SubfieldElement zp,
                       const LinkSpec& szp);

struct LinkingFamily {
  FieldPtr field;
  std::optional<FieldElement> t;  // set for R_t, empty for R
  std::vector<SubfieldElement> zs;
  std::vector<LinkSpec> specs;
  std::vector<CentralSet> sets;
  bool degenerate = false;  // fewer than two members

  CentralSet member(SubfieldElement z, const LinkSpec& s) const;
  ThirdSet third_spec(std::size_t i, std::size_t j) const;
  CentralSet third(std::size_t i, std::size_t j) const;
};

// `specs` is empty (all Ker), one shared entry, or one entry per z in F_{2^e}^*.
LinkingFamily build_linking_Rt(const FieldPtr& F, FieldElement t, const std::vector<LinkSpec>& specs = {});
LinkingFamily build_linking_R(const FieldPtr& F, const std::vector<LinkSpec>& specs = {});

// ---- partial difference sets, p odd ------------------------------------------

void require_pds_field(const Field& F);
CentralSet build_pds_tz(const FieldPtr& F, FieldElement t, std::optional<SubfieldElement> z = std::nullopt);
CentralSet build_pds_z(const FieldPtr& F, std::optional<SubfieldElement> z = std::nullopt);
CentralSet build_pds_z_prime(const FieldPtr& F, std::optional<SubfieldElement> z = std::nullopt);
CentralSet build_pds_z_dprime(const FieldPtr& F, std::optional<SubfieldElement> z = std::nullopt);
// (G \ S) \ {1}, computed on (B, Gamma).
CentralSet complement_minus_identity(const CentralSet& S);

// ---- m = f examples ----------------------------------------------------------

CentralSet build_example_mf(const FieldPtr& F, std::optional<FieldElement> t, Choice b,
                            const std::vector<FieldElement>& J0, const std::vector<FieldElement>& J1);

struct ExampleMatch {
  int example = 0;  // 4: with B, 5: without B
  std::optional<FieldElement> t;
  Choice b = Choice::Ker;
  std::vector<FieldElement> J0, J1;
};
std::optional<ExampleMatch> match_example_mf(const CentralSet& S);

// ---- Dillon form -------------------------------------------------------------

// E = Z(G) = F_2^m; coset i has representative reps[i] and, for i >= 1,
// hyperplane {(0,x) : Tr_m(normals[i-1] x) = 0}.  Coset 0 is left out.
struct DillonSpec {
  std::uint32_t q = 2;
  std::uint32_t d = 0;
  std::uint64_t s = 0;  // (q^{d+1} - 1)/(q - 1)
  std::vector<GroupElement> reps;
  std::vector<FieldElement> normals;
};

DillonSpec dillon_spec_seeded(const FieldPtr& F, std::uint64_t seed);
std::vector<GroupElement> build_dillon(const Group& G, const DillonSpec& spec);

struct DillonWitness {
  DillonSpec spec;
  std::vector<FieldElement> coset_a;  // field element a of each used coset
  std::uint64_t elements = 0;
};
DillonWitness dillon_form_of(const Group& G, const CentralSet& ds, SubfieldElement z,
                             std::optional<FieldElement> t);

}  // namespace suzuki

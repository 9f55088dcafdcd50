#pragma once

// Two independent engines for the difference-set conditions:
//   group ring   exact DD^(-1) by pairwise accumulation
//   character    omega_chi(D) over the character table (central sets only)
// plus linking-system checks, exhaustive searches and cross-validation.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "suzuki/central_set.hpp"
#include "suzuki/characters.hpp"
#include "suzuki/constructions.hpp"
#include "suzuki/group.hpp"

namespace suzuki {

inline constexpr std::size_t kWitnessCap = 16;
inline constexpr double kConvolutionBudget = 1e10;  // |S|^2 (or |S||T|) pair products

struct DSParams {
  std::int64_t v = 0, k = 0, lambda = 0, n = 0;
  friend bool operator==(const DSParams&, const DSParams&) = default;
};
struct PDSParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const PDSParams&, const PDSParams&) = default;
};
struct LinkingParams {
  std::int64_t mu = 0, eta = 0;
  std::uint64_t l = 0;
  friend bool operator==(const LinkingParams&, const LinkingParams&) = default;
};

// lambda from (v, k) when integral.
std::optional<DSParams> ds_params_for(std::int64_t v, std::int64_t k);
bool ds_params_consistent(const DSParams& p);
bool pds_params_consistent(const PDSParams& p);
// Both sign choices k(k +- sqrt n)/v, mu = eta -+ sqrt n; empty when n is not a square.
std::vector<LinkingParams> linking_params_for(const DSParams& p);
// epsilon = +-1 when (v,k,lambda,mu) = (n^2, r(n - eps), r^2 + eps(n - 3r), r^2 - eps r).
std::optional<int> latin_square_type(const PDSParams& p);

enum class Method { GroupRing, Character, Both };
const char* method_name(Method m) noexcept;
Method parse_method(const std::string& s);

struct Witness {
  std::string kind;    // element | character | parameter | regularity | pair | engine
  std::string detail;  // human readable
};

struct VerifyReport {
  std::string check;   // ds | pds | linking | cross-validate | sampled-characters
  std::string method;
  bool result = false;
  bool trivial = false;
  bool degenerate = false;
  std::optional<DSParams> ds;
  std::optional<PDSParams> pds;
  std::optional<LinkingParams> linking;
  std::optional<int> latin_epsilon;
  std::uint64_t checked = 0;  // characters, elements, samples or pairs examined
  std::vector<Witness> witnesses;
  std::uint64_t witness_total = 0;
  std::vector<std::string> notes;
  double seconds = 0;

  void add_witness(std::string kind, std::string detail);
};

// ---- group ring ------------------------------------------------------------------

// Abstract finite group on indices [0, order) used by the convolution engine,
// so the same code runs on A_p(m, theta) and on small abelian test groups.
struct FiniteGroupView {
  std::uint64_t order = 0;
  std::uint64_t identity = 0;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> div;  // x y^{-1}
  std::function<std::uint64_t(std::uint64_t)> inv;
};
FiniteGroupView view_of(const Group& G);

using GroupRingVec = std::vector<std::int64_t>;

// Coefficients of D E^{(-1)} (dense, indexed like the group).
GroupRingVec convolve(const FiniteGroupView& G, const std::vector<std::uint64_t>& D,
                      const std::vector<std::uint64_t>& E, unsigned threads = 0);
GroupRingVec convolve(const Group& G, const std::vector<GroupElement>& D, const std::vector<GroupElement>& E,
                      unsigned threads = 0);
GroupRingVec convolve_ddinv(const Group& G, const CentralSet& S, unsigned threads = 0);
GroupRingVec convolve_ddinv(const FiniteGroupView& G, const std::vector<std::uint64_t>& D, unsigned threads = 0);

// Group-ring checks on explicit element lists (any group view).
VerifyReport check_ds_groupring(const FiniteGroupView& G, const std::vector<std::uint64_t>& D, unsigned threads = 0);
VerifyReport check_pds_groupring(const FiniteGroupView& G, const std::vector<std::uint64_t>& D, unsigned threads = 0);

// ---- central sets, either engine ----------------------------------------------------

// Class of g^{-1} for any g in c.
ClassId inverse_class(const Group& G, ClassId c);
// The central set whose elements are exactly D, if D is a union of classes.
std::optional<CentralSet> central_set_of(const Group& G, const std::vector<GroupElement>& D);

struct VerifyContext {
  const Group* group = nullptr;
  const CharacterTable* table = nullptr;  // required for Method::Character / Both
  unsigned threads = 0;
};

VerifyReport check_ds(const VerifyContext& ctx, const CentralSet& S, Method method);
VerifyReport check_pds(const VerifyContext& ctx, const CentralSet& S, Method method);

// Group-ring check of the ds/pds condition on a non-central element list;
// the character method is refused for such inputs.
VerifyReport check_ds_elements(const VerifyContext& ctx, const std::vector<GroupElement>& D, Method method);

using ThirdResolver = std::function<std::optional<CentralSet>(std::size_t, std::size_t)>;
VerifyReport check_linking(const VerifyContext& ctx, const std::vector<CentralSet>& family,
                           const ThirdResolver& third, Method method);
VerifyReport check_linking(const VerifyContext& ctx, const LinkingFamily& family, Method method);

// ---- searches -----------------------------------------------------------------------

inline constexpr std::uint64_t kMaxClassesUnpruned = 40;
inline constexpr std::uint64_t kMaxClassesPruned = 64;

struct SearchStats {
  std::uint64_t central_candidates = 0;  // B subsets that survived the central tests
  std::uint64_t nodes = 0;               // DFS nodes over (a, Gamma(a))
  std::uint64_t leaves = 0;              // complete candidates checked exactly
  std::uint64_t found = 0;
  bool parameters_feasible = true;
};

struct SearchResult {
  std::vector<CentralSet> sets;
  SearchStats stats;
  double seconds = 0;
};

SearchResult search_central_ds(const VerifyContext& ctx, const DSParams& params);
SearchResult search_central_pds(const VerifyContext& ctx, const PDSParams& params);

// Unpruned oracle: every central subset of the right size, group-ring engine.
SearchResult brute_force_central(const VerifyContext& ctx, std::int64_t k,
                                 const std::function<bool(const CentralSet&)>& accept);

// ---- cross validation ------------------------------------------------------------------

struct CrossValidation {
  VerifyReport report;
  std::uint64_t agreements = 0;
  std::uint64_t ds_true = 0;
  std::uint64_t pds_true = 0;
};

// Random central subsets (one mt19937_64 draw per class, bit 0), followed by `extra`.
CrossValidation cross_validate(const VerifyContext& ctx, std::uint64_t samples, std::uint64_t seed,
                               const std::vector<CentralSet>& extra = {});
CrossValidation cross_validate_sets(const VerifyContext& ctx, const std::vector<CentralSet>& sets);

// omega_chi(S) for `sample_size` nontrivial characters drawn from `seed` must be
// a rational integer in `expected`.
VerifyReport sampled_char_check(const CharacterTable& table, const CentralSet& S,
                                const std::vector<std::int64_t>& expected, std::uint64_t sample_size,
                                std::uint64_t seed, unsigned threads = 0);

// identity not in S and S^{(-1)} = S, on `samples` classes drawn from `seed`
// (all classes when samples == 0).
VerifyReport sampled_regularity_check(const Group& G, const CentralSet& S, std::uint64_t samples,
                                      std::uint64_t seed, unsigned threads = 0);

// Cardinality by walking the class stream.
std::uint64_t streamed_cardinality(const Group& G, const CentralSet& S);

}  // namespace suzuki

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/tree.hpp"
#include "potts/catalog.hpp"
#include "potts/model.hpp"

// Exhaustive finite-volume measures mu_n(sigma) = rho^{H(sigma)} prod_{x in W_n} h_{sigma(x)} / Z_n
// for translation-invariant boundary fields.
namespace cayley {

using padic::PadicNumber;
using potts::ModelParams;

/// Exhaustive checks refuse slices with more than this many configurations.
inline constexpr std::int64_t kEnumerationBudget = 2'000'000;

/// Translation-invariant boundary field (h_0, ..., h_{q-1}) with h_0 = 1.
struct BoundaryField {
  std::vector<PadicNumber> h;

  /// DomainError unless h has at least three components and h_0 == 1 exactly.
  explicit BoundaryField(std::vector<PadicNumber> components);
  /// (1, x, 1, ..., 1): the field of the fixed point x of f.
  static BoundaryField invariant_line(const PadicNumber& x, long q);

  std::size_t q() const { return h.size(); }
};

/// Configurations sharing a Hamiltonian and leaf spin counts share a weight.
struct WeightClass {
  std::int64_t hamiltonian = 0;
  /// Number of boundary vertices carrying each spin.
  std::vector<int> leaf_counts;
  std::int64_t configurations = 0;
  PadicNumber weight;
};

struct MeasureTable {
  std::vector<WeightClass> classes;
  PadicNumber partition;
  std::int64_t configurations = 0;
};

/// q^{|V_n|}, or ResourceError naming the count when it exceeds the budget.
std::int64_t enumeration_size(long q, const TreeSlice& slice);

/// Enumerates every configuration on the slice.  PrecisionError if Z_n is
/// zero at the tracked precision.
MeasureTable enumerate_measure(const ModelParams& params, const BoundaryField& field, const TreeSlice& slice);

/// mu_n(sigma) for one configuration, given the partition value Z_n.
PadicNumber finite_measure(const ModelParams& params, const BoundaryField& field, const TreeSlice& slice,
                           const Configuration& config, const PadicNumber& partition);

/// log_p |mu_n(sigma)|_p for the field of a fixed point x, from
///   |mu_n(sigma)|_p = |x|^{#sigma} |rho|^{H} / (|x + q - 1| |x + rho + q - 2|^{3|V_{n-1}|}),
/// where #sigma counts boundary vertices with spin 1.
std::int64_t closed_form_log_norm(const PadicNumber& x, const ModelParams& params, int n, std::int64_t hamiltonian,
                                  std::int64_t ones);

struct NormCheckReport {
  std::int64_t configurations = 0;
  std::int64_t classes = 0;
  std::int64_t mismatched_configurations = 0;
  /// sum over all configurations of mu_n equals 1 at the tracked precision.
  bool normalized = false;
  std::string first_mismatch;
  bool pass() const { return mismatched_configurations == 0 && normalized; }
};

/// Compares every enumerated |mu_n(sigma)|_p with the closed form.
NormCheckReport check_closed_form_norms(const ModelParams& params, const PadicNumber& x, const TreeSlice& slice);

struct CompatibilityReport {
  std::int64_t base_configurations = 0;
  std::int64_t terms = 0;
  /// Smallest number of agreeing digits between sum_omega mu_n(sigma v omega)
  /// and mu_{n-1}(sigma) over all sigma on V_{n-1}.
  int worst_agreement = 0;
  int required_digits = 0;
  bool pass = false;
};

/// Sums mu_n over every extension of each configuration on V_{n-1}.
/// Requires n >= 1.
CompatibilityReport check_compatibility(const ModelParams& params, const BoundaryField& field, int n,
                                        int required_digits);

struct RecursionReport {
  /// a with (sum_j rho^{delta_ij} h_j)^3 = a h_i for every i.
  PadicNumber a;
  PadicNumber partition;
  PadicNumber previous_partition;
  /// Z_n = a^{|W_{n-1}|} Z_{n-1}, both sides enumerated.
  bool recursion_holds = false;
  /// Z_n = (sum_i h_i) a^{|V_{n-1}|}.
  bool closed_form_holds = false;
  /// Z_n = a^{|V_{n-1}|} without the root factor; holds only when sum_i h_i is 1.
  bool closed_form_without_root_holds = false;
  /// |Z_n|_p = |sum_i h_i|_p |a|_p^{|V_{n-1}|}.
  bool norm_identity_holds = false;
};

/// HypothesisError when the field does not satisfy the proportionality that
/// defines a.  Requires n >= 1.
RecursionReport check_partition_recursion(const ModelParams& params, const BoundaryField& field, int n);

}  // namespace cayley

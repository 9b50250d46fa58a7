#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/finite_volume.hpp"
#include "cayley/tree.hpp"
#include "potts/catalog.hpp"

// Norm trajectories of translation-invariant measures along explicit
// configuration sequences, evaluated through the closed form
//   log_p |mu_n(sigma)|_p = -#sigma ord(x) - H(sigma) ord(rho) + ord(x + q - 1) + 3|V_{n-1}| ord(x + rho + q - 2).
namespace cayley {

using potts::MeasureCatalog;

/// sigma_{0,n} on V_{2n}: spin 1 on even levels, 0 on odd levels, so H = 0.
Configuration alternating_configuration(int n);
/// sigma~_n on V_n: spin 1 on V_{n-1}, 0 on W_n, so H = |V_{n-1}| - 1 edges.
Configuration tilde_configuration(int n);
/// A configuration on V_n with exactly `hamiltonian` agreeing edges and no
/// boundary vertex carrying spin 1: a breadth-first prefix of
/// hamiltonian + 1 vertices carries spin 1, and every other vertex takes
/// 0 below a 1 or a 2 and 2 below a 0.  Needs q >= 3 and
/// hamiltonian + 1 <= |V_{n-1}|.
Configuration prefix_configuration(int n, std::int64_t hamiltonian);

/// Closed-form data for one configuration in a sequence.
struct SequencePoint {
  int n = 0;
  std::int64_t hamiltonian = 0;
  std::int64_t ones = 0;
};

struct NormSeries {
  std::string label;
  std::vector<std::int64_t> log_norms;
  bool strictly_increasing() const;
  bool strictly_decreasing() const;
};

NormSeries norm_series(const potts::MeasureEntry& measure, const potts::ModelParams& params,
                       const std::vector<SequencePoint>& sequence);

/// A bounded and an unbounded measure whose norms diverge and vanish on one
/// configuration sequence.
struct CommonWitness {
  std::vector<SequencePoint> sequence;
  NormSeries unbounded;
  NormSeries bounded;
  bool holds() const { return unbounded.strictly_increasing() && bounded.strictly_decreasing(); }
};

struct WitnessReport {
  int n_max = 0;
  /// |mu_0(sigma_{0,n})|_p.
  NormSeries mu0_alternating;
  /// |mu_2(sigma~_n)|_p for the first catalogued root with |x|_p = 1.
  NormSeries mu2_tilde;
  /// |mu_0(sigma~_n) mu_2(sigma~_n)|_p; the bound asks every entry <= 0.
  NormSeries product_tilde;
  bool product_bounded = false;
  std::optional<CommonWitness> common;
};

/// DomainError unless |rho|_p < |q - 1|_p^2 < 1 and the catalog has a root
/// of norm 1, or n_max is outside [1, 18].  Sequence points are counted in
/// closed form, so sigma_{0,n} is never materialized.
WitnessReport witness_trajectories(const potts::ModelParams& params, const MeasureCatalog& catalog, int n_max);

/// Searches the catalog for an unbounded/bounded pair and builds the
/// sequence of prefix configurations on V_n, n = 1..n_max, with
/// H_n = min(|V_{n-1}| - 1, floor((3|V_{n-1}| ord(d_u) - 1) / (2 ord(rho)))),
/// where d_u = x_u + rho + q - 2 for the unbounded measure.  Returns
/// nullopt when |rho|_p >= 1 or no pair yields strict monotonicity.
std::optional<CommonWitness> find_common_witness(const potts::ModelParams& params, const MeasureCatalog& catalog,
                                                 int n_max);

}  // namespace cayley

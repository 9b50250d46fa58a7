#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potts/model.hpp"

// Translation-invariant measures: roots of the fixed-point cubic, their
// boundedness, and the backward iteration toward the small root.
namespace potts {

/// Supremum behaviour of |mu(sigma)|_p over all finite-volume configurations.
///
/// With X = max(0, -ord x), R = max(0, -ord rho) and d = x + rho + q - 2,
/// the largest log_p |mu(sigma)|_p on V_n is
///   3^n X + 3|V_{n-1}| (R + ord d) + const,
/// so the measure is bounded iff 2X + 3R + 3 ord(d) <= 0.
struct Boundedness {
  padic::Norm denom_norm = padic::Norm::zero();
  padic::Norm root_norm = padic::Norm::zero();
  /// 2X + 3R + 3 ord(d); the measure is bounded iff this is <= 0.
  int growth = 0;
  bool bounded = false;
};

/// SingularityError when x + rho + q - 2 vanishes.
Boundedness boundedness_of_root(const PadicNumber& x, const ModelParams& params);

struct MeasureEntry {
  /// "mu0" for the trivial field x = 1, then "mu1", "mu2", ... .
  std::string label;
  PadicNumber x;
  /// Depressed-cubic root z = x - A/3; unset for the trivial field.
  std::optional<PadicNumber> z;
  Boundedness boundedness;
  bool in_Ep = false;
  /// |f(x) - x|_p <= p^-residual_digits was verified.
  int residual_digits = 0;
};

struct MeasureCatalog {
  /// measures[0] is the trivial field x = 1; the rest are the other roots.
  std::vector<MeasureEntry> measures;
  CubicCoefficients coefficients;
  /// The integers k for which z = p^k y, y a unit, was tried.
  std::vector<int> scales;

  std::size_t size() const { return measures.size(); }
  std::size_t extra_count() const { return measures.size() - 1; }
};

/// Extra digits the root solver carries beyond the verification target; a
/// truncated rho must be known to digits + kCatalogGuardDigits.
inline constexpr int kCatalogGuardDigits = 8;

/// Every root of x^3 - A x^2 - B x + C in Q_p, each verified as a fixed point
/// of f to `digits` digits (InvariantViolation otherwise).  Root valuations
/// come from the Newton polygon of z^3 + alpha z - beta; each candidate
/// valuation k is solved as y^3 + p^{-2k} alpha y = p^{-3k} beta over the units.
/// PrecisionError when a truncated rho is too short for the target.
MeasureCatalog fixed_points(const ModelParams& params, int digits);

/// For rho in E_p and |q|_p < 1: whether x = z + A/3 lies in E_p, checked
/// against |z|_p < 1 (InvariantViolation on disagreement).  DomainError outside
/// that parameter range.
bool lift_check(const PadicNumber& z, const ModelParams& params);

struct ContractionStep {
  PadicNumber value;
  /// ord_p(h_n - x1); unset once the two agree to the tracked precision.
  std::optional<int> distance;
  bool contracted = true;
};

struct ContractionTrajectory {
  PadicNumber small_root;
  /// ord_p(q - 1); each step must gain at least 2m digits toward the small root.
  int m = 0;
  std::vector<ContractionStep> steps;
  bool contracting = true;
};

/// Iterates h -> f(h) from h_init, tracking the distance to the root x1 with
/// |x1|_p < 1.  Requires |rho|_p < |q - 1|_p^2 < 1, sqrt(-3) in Q_p and
/// |h_init|_p != 1 (DomainError otherwise).
ContractionTrajectory contraction_iterate(const PadicNumber& h_init, const ModelParams& params, int steps,
                                          int digits);

}  // namespace potts

#pragma once

#include <optional>
#include <vector>

#include "padic/padic_number.hpp"

// The q-state Potts model on the order-3 Cayley tree: parameters, the
// fixed-point cubic for translation-invariant boundary fields, and the
// single-site recursion maps.
namespace potts {

using padic::PadicNumber;
using padic::Prime;

enum class RhoSource { Literal, ExpOf };

struct ModelParams {
  Prime prime;
  long q = 3;
  /// rho = exp(J) where J is the coupling.
  PadicNumber rho;
  RhoSource source = RhoSource::Literal;
  std::optional<PadicNumber> coupling;

  /// DomainError for q < 3, rho == 0 or a rho over another prime.
  static ModelParams with_rho(const Prime& prime, long q, PadicNumber rho);
  /// rho = exp_p(J); DomainError unless |J|_p <= 1/p.
  static ModelParams with_coupling(const Prime& prime, long q, const PadicNumber& coupling,
                                   const padic::PrecisionContext& ctx = {});

  PadicNumber q_value() const { return PadicNumber::from_integer(q, prime); }
};

/// The fixed-point cubic x^3 - A x^2 - B x + C = 0 and its depressed form
/// z^3 + alpha z = beta under x = z + A/3.
struct CubicCoefficients {
  PadicNumber A;
  PadicNumber B;
  PadicNumber C;
  PadicNumber alpha;
  PadicNumber beta;
};

/// alpha and beta are evaluated in their (rho - 1)-factored forms so that
/// a truncated rho close to 1 keeps its relative precision.
CubicCoefficients coefficients_ABC(const ModelParams& params);

/// x^3 - A x^2 - B x + C at x.
PadicNumber fixed_point_cubic(const CubicCoefficients& c, const PadicNumber& x);

/// One step of the single-site recursion for a field with q - 1 free
/// components (h_0 normalized to 1):
///   F_i = ((rho - 1) h_i + sum_j h_j + 1) / (sum_j h_j + rho).
/// SingularityError when the denominator vanishes.
std::vector<PadicNumber> boundary_map_F(const std::vector<PadicNumber>& h, const PadicNumber& rho);

/// g(x) = (rho x + q - 1) / (x + rho + q - 2); the recursion restricted to
/// the invariant line (1, ..., x, ..., 1).
PadicNumber g_map(const PadicNumber& x, const ModelParams& params);
/// f(x) = g(x)^3; translation-invariant fields are fixed points of f.
PadicNumber f_map(const PadicNumber& x, const ModelParams& params);
/// g^{-1}(y) = ((rho + q - 2) y - q + 1) / (rho - y).
PadicNumber g_inverse(const PadicNumber& y, const ModelParams& params);

/// x + rho + q - 2, the denominator of g.
PadicNumber g_denominator(const PadicNumber& x, const ModelParams& params);

/// A denominator that must not vanish: SingularityError on exact zero,
/// PrecisionError when it is zero at the tracked precision.
PadicNumber checked_sum(const PadicNumber& x, const PadicNumber& y, const char* what);

}  // namespace potts

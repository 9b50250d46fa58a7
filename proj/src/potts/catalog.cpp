#include "potts/catalog.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <string>

#include "padic/cubic.hpp"
#include "padic/errors.hpp"
#include "padic/modular.hpp"

namespace potts {

namespace {

PadicNumber unit_part(const PadicNumber& x) { return x.shifted(-x.valuation()); }

// Roots of z^3 + alpha z = beta when alpha or beta is exactly zero.
std::vector<PadicNumber> degenerate_roots(const PadicNumber& alpha, const PadicNumber& beta, int digits) {
  const Prime& prime = alpha.prime();
  const std::int64_t p = prime.value();
  std::vector<PadicNumber> zs;
  if (beta.is_zero()) {
    zs.push_back(PadicNumber::zero(prime));
    if (!alpha.is_zero() && alpha.valuation() % 2 == 0) {
      if (auto s = padic::sqrt_unit(unit_part(-alpha))) {
        zs.push_back(s->first.shifted(alpha.valuation() / 2));
        zs.push_back(s->second.shifted(alpha.valuation() / 2));
      }
    }
    return zs;
  }
  // z^3 = beta.
  if (beta.valuation() % 3 != 0) return zs;
  const PadicNumber u = unit_part(beta);
  const std::int64_t u0 = u.leading_digit();
  const padic::ZpPolynomial poly = {-u, PadicNumber::zero(prime), PadicNumber::zero(prime), PadicNumber::one(prime)};
  for (std::int64_t t = 1; t < p; ++t) {
    if (padic::modp::pow(t, 3, p) != u0) continue;
    PadicNumber y = padic::hensel_lift(poly, PadicNumber::from_integer(static_cast<long>(t), prime), 0, digits);
    zs.push_back(y.shifted(beta.valuation() / 3));
  }
  return zs;
}

// Candidate root valuations from the Newton polygon of z^3 + alpha z - beta.
std::vector<int> newton_slopes(const PadicNumber& alpha, const PadicNumber& beta) {
  const int va = alpha.valuation();
  const int vb = beta.valuation();
  std::vector<int> ks;
  if (3 * va >= 2 * vb) {
    if (vb % 3 == 0) ks.push_back(vb / 3);
  } else {
    ks.push_back(vb - va);
    if (va % 2 == 0) ks.push_back(va / 2);
  }
  return ks;
}

bool same_value(const PadicNumber& x, const PadicNumber& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return padic::agreement(x, y).indistinguishable();
}

// Orders roots by decreasing valuation, then by their digits.
bool root_less(const PadicNumber& x, const PadicNumber& y) {
  if (x.valuation() != y.valuation()) return x.valuation() > y.valuation();
  const int k = std::min(x.precision(), y.precision());
  const mpz_class& pk = x.prime().power(k);
  mpz_class ux = x.unit() % pk;
  mpz_class uy = y.unit() % pk;
  return ux < uy;
}

MeasureEntry verified_entry(std::string label, const PadicNumber& x, std::optional<PadicNumber> z,
                            const ModelParams& params, int digits) {
  const padic::Agreement ag = padic::agreement(f_map(x, params), x);
  const int residual = ag.exact ? digits : ag.digits;
  if (!ag.indistinguishable() || residual < digits) {
    throw padic::InvariantViolation(label + " is not a fixed point of f: |f(x) - x|_p = p^-" + std::to_string(ag.digits) +
                                    ", need p^-" + std::to_string(digits));
  }
  // Z_n = (x + q - 1) (x + rho + q - 2)^{3|V_{n-1}|} must not vanish.
  checked_sum(x, PadicNumber::from_integer(params.q - 1, params.prime), "x + q - 1");
  MeasureEntry e{std::move(label), x, std::move(z), boundedness_of_root(x, params), padic::is_in_Ep(x), residual};
  return e;
}

}  // namespace

Boundedness boundedness_of_root(const PadicNumber& x, const ModelParams& params) {
  const PadicNumber d = g_denominator(x, params);
  Boundedness b;
  b.denom_norm = d.norm();
  b.root_norm = x.norm();
  const int X = x.is_zero() ? 0 : std::max(0, -x.valuation());
  const int R = std::max(0, -params.rho.valuation());
  b.growth = 2 * X + 3 * R + 3 * d.valuation();
  b.bounded = b.growth <= 0;
  return b;
}

MeasureCatalog fixed_points(const ModelParams& params, int digits) {
  MeasureCatalog catalog{{}, coefficients_ABC(params), {}};
  const CubicCoefficients& c = catalog.coefficients;
  const Prime& prime = params.prime;
  const int target = digits + kCatalogGuardDigits;
  if (!params.rho.is_exact() && params.rho.absolute_precision() < target) {
    throw padic::PrecisionError("rho is known to p^" + std::to_string(params.rho.absolute_precision()) +
                                "; a catalog verified to " + std::to_string(digits) + " digits needs p^" +
                                std::to_string(target));
  }

  std::vector<PadicNumber> zs;
  if (c.alpha.is_zero() || c.beta.is_zero()) {
    zs = degenerate_roots(c.alpha, c.beta, target);
  } else {
    for (int k : newton_slopes(c.alpha, c.beta)) {
      catalog.scales.push_back(k);
      padic::CubicProblem scaled(c.alpha.shifted(-2 * k), c.beta.shifted(-3 * k));
      for (const auto& y : padic::zp_star_roots(scaled, target)) zs.push_back(y.shifted(k));
    }
  }

  const PadicNumber shift = c.A / PadicNumber::from_integer(3, prime);
  const PadicNumber one = PadicNumber::one(prime);
  std::vector<std::pair<PadicNumber, PadicNumber>> extras;  // (x, z)
  const PadicNumber denom_shift = params.rho + PadicNumber::from_integer(params.q - 2, prime);
  for (const auto& z : zs) {
    PadicNumber x = z + shift;
    if (same_value(x, one)) continue;
    // x + rho + q - 2 = 0 solves the cleared quartic but not x = f(x); this
    // happens only for rho = 1 or rho = 1 - q.
    if (same_value(x, -denom_shift)) continue;
    bool seen = false;
    for (const auto& e : extras) seen = seen || same_value(e.first, x);
    if (!seen) extras.emplace_back(std::move(x), z);
  }
  std::sort(extras.begin(), extras.end(), [](const auto& l, const auto& r) { return root_less(l.first, r.first); });

  catalog.measures.push_back(verified_entry("mu0", one, std::nullopt, params, digits));
  for (std::size_t i = 0; i < extras.size(); ++i) {
    catalog.measures.push_back(
        verified_entry("mu" + std::to_string(i + 1), extras[i].first, extras[i].second, params, digits));
  }
  return catalog;
}

bool lift_check(const PadicNumber& z, const ModelParams& params) {
  if (!padic::is_in_Ep(params.rho)) throw padic::DomainError("lift_check needs rho in E_p");
  const PadicNumber q = params.q_value();
  if (q.valuation() < 1) throw padic::DomainError("lift_check needs |q|_p < 1");
  const CubicCoefficients c = coefficients_ABC(params);
  const PadicNumber x = z + c.A / PadicNumber::from_integer(3, params.prime);
  const bool expected = z.is_zero() || z.valuation() >= 1;
  const bool in_ep = !x.is_zero() && padic::is_in_Ep(x);
  if (in_ep != expected) {
    throw padic::InvariantViolation("x = z + A/3 in E_p disagrees with |z|_p < 1");
  }
  return in_ep;
}

ContractionTrajectory contraction_iterate(const PadicNumber& h_init, const ModelParams& params, int steps,
                                          int digits) {
  const Prime& prime = params.prime;
  const PadicNumber q_minus_one = PadicNumber::from_integer(params.q - 1, prime);
  const int m = q_minus_one.valuation();
  if (m < 1 || params.rho.valuation() <= 2 * m) {
    throw padic::DomainError("contraction needs |rho|_p < |q-1|_p^2 < 1");
  }
  const std::int64_t p = prime.value();
  if (!padic::modp::is_square(padic::modp::reduce(-3, p), p)) {
    throw padic::DomainError("contraction needs sqrt(-3) in Q_p");
  }
  if (!h_init.is_zero() && h_init.valuation() == 0) throw padic::DomainError("contraction needs |h_init|_p != 1");

  const MeasureCatalog catalog = fixed_points(params, digits);
  std::optional<PadicNumber> small;
  for (std::size_t i = 1; i < catalog.size(); ++i) {
    const auto& x = catalog.measures[i].x;
    if (x.valuation() > 0) {
      if (small) throw padic::InvariantViolation("more than one root with |x|_p < 1");
      small = x;
    }
  }
  if (!small) throw padic::InvariantViolation("no root with |x|_p < 1");

  ContractionTrajectory out{*small, m, {}, true};
  auto distance = [&](const PadicNumber& h) -> std::optional<int> {
    auto d = PadicNumber::try_add(h, -*small);
    if (!d || d->is_zero()) return std::nullopt;
    return d->valuation();
  };
  PadicNumber h = h_init;
  out.steps.push_back({h, distance(h), true});
  for (int i = 0; i < steps; ++i) {
    h = f_map(h, params);
    ContractionStep step{h, distance(h), true};
    const auto& prev = out.steps.back().distance;
    if (step.distance) step.contracted = prev.has_value() && *step.distance >= *prev + 2 * m;
    out.contracting = out.contracting && step.contracted;
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace potts

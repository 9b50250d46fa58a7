#include "potts/model.hpp"

#include <string>

#include "padic/errors.hpp"

namespace potts {

namespace {

PadicNumber rational(long num, long den, const Prime& prime) {
  return PadicNumber::from_rational(mpq_class(num, den), prime);
}

// sum_k c_k t^k by Horner's rule, coefficients lowest degree first.
PadicNumber horner(const std::vector<PadicNumber>& c, const PadicNumber& t) {
  PadicNumber acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * t + c[k];
  return acc;
}

}  // namespace

ModelParams ModelParams::with_rho(const Prime& prime, long q, PadicNumber rho) {
  if (q < 3) throw padic::DomainError("q must be at least 3, got " + std::to_string(q));
  if (rho.is_zero()) throw padic::DomainError("rho must be nonzero");
  if (!(rho.prime() == prime)) throw padic::DomainError("rho is over a different prime");
  return ModelParams{prime, q, std::move(rho), RhoSource::Literal, std::nullopt};
}

ModelParams ModelParams::with_coupling(const Prime& prime, long q, const PadicNumber& coupling,
                                       const padic::PrecisionContext& ctx) {
  if (!(coupling.prime() == prime)) throw padic::DomainError("J is over a different prime");
  ModelParams params = with_rho(prime, q, padic::exp_p(coupling, ctx));
  params.source = RhoSource::ExpOf;
  params.coupling = coupling;
  return params;
}

CubicCoefficients coefficients_ABC(const ModelParams& params) {
  const Prime& p = params.prime;
  const PadicNumber& r = params.rho;
  const PadicNumber q = params.q_value();
  const PadicNumber one = PadicNumber::one(p);
  auto n = [&](long v) { return PadicNumber::from_integer(v, p); };

  PadicNumber A = r.pow(3) - n(3) * r - n(3) * q + n(5);
  PadicNumber B = r * (r - n(3)).pow(2) + n(9) * q + n(3) * r * q * (r - n(2)) - n(3) * q * q - n(7);
  PadicNumber C = (q - one).pow(3);

  // alpha = t^2/3 (-9 + 9q - 9t + 6qt - 9t^2 - 6t^3 - t^4),
  // beta = t^3/27 (54 - 81q + 27q^2 + (81 - 81q) t + (108 - 81q) t^2
  //                + (81 - 18q) t^3 + 54 t^4 + 18 t^5 + 2 t^6), t = rho - 1.
  const long qi = params.q;
  const PadicNumber t = r - one;
  const std::vector<PadicNumber> alpha_poly = {n(9 * qi - 9), n(6 * qi - 9), n(-9), n(-6), n(-1)};
  const std::vector<PadicNumber> beta_poly = {
      PadicNumber::from_integer(54, p) - n(81) * q + n(27) * q * q,
      n(81) - n(81) * q,
      n(108) - n(81) * q,
      n(81) - n(18) * q,
      n(54),
      n(18),
      n(2)};
  PadicNumber alpha = PadicNumber::zero(p);
  PadicNumber beta = PadicNumber::zero(p);
  if (!t.is_zero()) {
    alpha = t.pow(2) * rational(1, 3, p) * horner(alpha_poly, t);
    beta = t.pow(3) * rational(1, 27, p) * horner(beta_poly, t);
  }
  return {std::move(A), std::move(B), std::move(C), std::move(alpha), std::move(beta)};
}

PadicNumber fixed_point_cubic(const CubicCoefficients& c, const PadicNumber& x) {
  return ((x - c.A) * x - c.B) * x + c.C;
}

PadicNumber checked_sum(const PadicNumber& x, const PadicNumber& y, const char* what) {
  auto s = PadicNumber::try_add(x, y);
  if (!s) throw padic::PrecisionError(std::string(what) + " is zero at the tracked precision");
  if (s->is_zero()) throw padic::SingularityError(std::string(what) + " vanishes");
  return *s;
}

std::vector<PadicNumber> boundary_map_F(const std::vector<PadicNumber>& h, const PadicNumber& rho) {
  if (h.empty()) throw padic::DomainError("boundary field needs at least one free component");
  const Prime& p = rho.prime();
  PadicNumber sum = PadicNumber::zero(p);
  for (const auto& x : h) sum += x;
  const PadicNumber den = checked_sum(sum, rho, "sum_j h_j + rho");
  const PadicNumber shift = sum + PadicNumber::one(p);
  const PadicNumber rho_minus_one = rho - PadicNumber::one(p);
  std::vector<PadicNumber> out;
  out.reserve(h.size());
  for (const auto& x : h) out.push_back((rho_minus_one * x + shift) / den);
  return out;
}

PadicNumber g_denominator(const PadicNumber& x, const ModelParams& params) {
  return checked_sum(x, params.rho + PadicNumber::from_integer(params.q - 2, params.prime), "x + rho + q - 2");
}

PadicNumber g_map(const PadicNumber& x, const ModelParams& params) {
  const PadicNumber den = g_denominator(x, params);
  return (params.rho * x + PadicNumber::from_integer(params.q - 1, params.prime)) / den;
}

PadicNumber f_map(const PadicNumber& x, const ModelParams& params) { return g_map(x, params).pow(3); }

PadicNumber g_inverse(const PadicNumber& y, const ModelParams& params) {
  const PadicNumber den = checked_sum(params.rho, -y, "rho - y");
  const PadicNumber k = params.rho + PadicNumber::from_integer(params.q - 2, params.prime);
  return (k * y - PadicNumber::from_integer(params.q - 1, params.prime)) / den;
}

}  // namespace potts

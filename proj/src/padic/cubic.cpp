#include "padic/cubic.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <string>

#include "padic/errors.hpp"
#include "padic/modular.hpp"

namespace padic {

namespace {

using i64 = std::int64_t;
using u128 = unsigned __int128;

mpz_class mod_power(const mpz_class& n, const mpz_class& modulus) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

int valuation_or_max(const mpz_class& n, i64 p, int cap) {
  if (n == 0) return cap;
  return std::min(valuation_of(n, p), cap);
}

// f(x) and f'(x) modulo `modulus`, coefficients given as residues.
mpz_class eval_poly(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& modulus) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod_power(acc * x + *it, modulus);
  return acc;
}

mpz_class eval_derivative(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& modulus) {
  mpz_class acc = 0;
  for (std::size_t k = c.size(); k-- > 1;) acc = mod_power(acc * x + c[k] * static_cast<long>(k), modulus);
  return acc;
}

// Exhaustive root list of x^3 + a x - b over F_p with multiplicities.
std::vector<FpRoot> scan_fp_roots(i64 a, i64 b, i64 p) {
  std::vector<FpRoot> roots;
  for (i64 x = 0; x < p; ++x) {
    i64 fx = modp::reduce(modp::mul(modp::mul(x, x, p), x, p) + modp::mul(a, x, p) - b, p);
    if (fx != 0) continue;
    bool simple = modp::reduce(3 * modp::mul(x, x, p) + a, p) != 0;
    roots.push_back({x, simple ? 1 : 2, simple});
  }
  return roots;
}

int count_with_multiplicity(const std::vector<FpRoot>& roots) {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::vector<i64> u_terms(i64 a0, i64 b0, i64 p, int upto, UThreeSign sign) {
  const i64 a = modp::reduce(a0, p);
  const i64 b = modp::reduce(b0, p);
  const std::size_t n = static_cast<std::size_t>(std::max(upto, 3));
  std::vector<i64> u(n + 1, 0);
  u[2] = modp::reduce(-a, p);
  u[3] = sign == UThreeSign::Positive ? b : modp::reduce(-b, p);
  for (std::size_t k = 4; k <= n; ++k) {
    u[k] = modp::reduce(modp::mul(b, u[k - 3], p) - modp::mul(a, u[k - 2], p), p);
  }
  return u;
}

int sequence_count(i64 a, i64 b, i64 p, UThreeSign sign) {
  const i64 d = modp::reduce(-4 * modp::pow(a, 3, p) - 27 * modp::mul(b, b, p), p);
  const i64 u = u_terms(a, b, p, static_cast<int>(p - 2), sign)[static_cast<std::size_t>(p - 2)];
  const i64 lhs = modp::mul(d, modp::mul(u, u, p), p);
  if (lhs == 0) return 3;
  if (lhs == modp::mul(9, modp::mul(a, a, p), p)) return 0;
  return 1;
}

// Unit part a* = a |a|_p.
PadicNumber unit_part(const PadicNumber& x) { return x.shifted(-x.valuation()); }

PadicNumber seed_value(i64 r, const Prime& prime) { return PadicNumber::from_integer(static_cast<long>(r), prime); }

std::vector<PadicNumber> cubic_poly(const CubicProblem& problem) {
  const Prime& prime = problem.prime();
  return {-problem.b, problem.a, PadicNumber::zero(prime), PadicNumber::one(prime)};
}

}  // namespace

// ---------------------------------------------------------------------------

PowerResidue qth_power_residue(std::int64_t a, int q, const Prime& prime) {
  const i64 p = prime.value();
  a = modp::reduce(a, p);
  if (a == 0) throw DomainError("qth_power_residue needs a nonzero residue");
  if (q < 1) throw DomainError("exponent must be positive");
  const i64 g = std::gcd(static_cast<i64>(q), p - 1);
  if (modp::pow(a, (p - 1) / g, p) != 1) return {false, 0};
  return {true, static_cast<int>(g)};
}

PadicNumber hensel_lift(const ZpPolynomial& poly, const PadicNumber& seed, int contact_order,
                        int target_precision) {
  if (poly.empty()) throw DomainError("empty polynomial");
  if (contact_order < 0) throw DomainError("contact order must be nonnegative");
  const Prime& prime = seed.prime();
  const i64 p = prime.value();
  const int i = contact_order;

  int available = INT_MAX;
  for (const auto& c : poly) {
    if (!(c.prime() == prime)) throw DomainError("coefficients and seed belong to different primes");
    if (!c.is_zero() && c.valuation() < 0) throw DomainError("coefficients must lie in Z_p");
    available = std::min(available, c.absolute_precision());
  }
  if (!seed.is_zero() && seed.valuation() < 0) throw DomainError("seed must lie in Z_p");
  if (seed.absolute_precision() < 2 * i + 1) {
    throw PrecisionError("seed must be known modulo p^" + std::to_string(2 * i + 1));
  }

  const int work = std::min(target_precision + i, available);
  if (work < 2 * i + 1) {
    throw PrecisionError("coefficients are known only modulo p^" + std::to_string(work) +
                         ", below the p^" + std::to_string(2 * i + 1) + " needed to lift");
  }
  const mpz_class& modulus = prime.power(work);
  std::vector<mpz_class> c;
  c.reserve(poly.size());
  for (const auto& coeff : poly) c.push_back(coeff.residue(work));

  mpz_class x = seed.residue(std::min(work, seed.absolute_precision()));
  const mpz_class fx0 = eval_poly(c, x, modulus);
  const mpz_class dfx0 = eval_derivative(c, x, modulus);
  if (valuation_or_max(fx0, p, work) < 2 * i + 1) {
    throw HypothesisError("f(seed) is not divisible by p^" + std::to_string(2 * i + 1));
  }
  if (valuation_or_max(dfx0, p, work) != i) {
    throw HypothesisError("ord_p f'(seed) differs from " + std::to_string(i));
  }

  const mpz_class& pi = prime.power(i);
  const mpz_class& reduced = prime.power(work - i);
  for (int iter = 0; iter < 256; ++iter) {
    mpz_class fx = eval_poly(c, x, modulus);
    if (fx == 0) break;
    mpz_class dfx = eval_derivative(c, x, modulus);
    mpz_class num = fx / pi;
    mpz_class den = mod_power(dfx / pi, reduced);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), reduced.get_mpz_t());
    x = mod_power(x - mod_power(num * inv, reduced), modulus);
    if (iter == 255) throw InvariantViolation("Newton iteration did not converge");
  }
  return PadicNumber::from_residue(prime, x, work - i);
}

// ---------------------------------------------------------------------------

std::vector<std::int64_t> u_sequence(std::int64_t a0, std::int64_t b0, const Prime& prime, int upto,
                                     UThreeSign sign) {
  return u_terms(a0, b0, prime.value(), upto, sign);
}

SignCalibration calibrate_u3_sign(std::span<const std::int64_t> primes) {
  SignCalibration cal;
  for (i64 p : primes) {
    Prime prime(p);
    for (i64 a = 1; a < p; ++a) {
      for (i64 b = 1; b < p; ++b) {
        const int scanned = count_with_multiplicity(scan_fp_roots(a, b, p));
        ++cal.pairs_checked;
        if (sequence_count(a, b, p, UThreeSign::Positive) != scanned) ++cal.mismatches_positive;
        if (sequence_count(a, b, p, UThreeSign::Negative) != scanned) ++cal.mismatches_negative;
      }
    }
  }
  if (cal.mismatches_positive == 0) {
    cal.sign = UThreeSign::Positive;
  } else if (cal.mismatches_negative == 0) {
    cal.sign = UThreeSign::Negative;
  } else {
    throw InvariantViolation("neither sign convention reproduces the F_p root counts");
  }
  return cal;
}

FpCubicReport count_roots_fp_cubic(std::int64_t a_bar, std::int64_t b_bar, const Prime& prime) {
  const i64 p = prime.value();
  FpCubicReport r;
  r.a_bar = modp::reduce(a_bar, p);
  r.b_bar = modp::reduce(b_bar, p);
  if (r.a_bar == 0 || r.b_bar == 0) throw DomainError("F_p cubic needs a, b nonzero mod p");
  r.discriminant = modp::reduce(-4 * modp::pow(r.a_bar, 3, p) - 27 * modp::mul(r.b_bar, r.b_bar, p), p);
  r.u_p_minus_2 = u_sequence(r.a_bar, r.b_bar, prime, static_cast<int>(p - 2))[static_cast<std::size_t>(p - 2)];
  r.count = sequence_count(r.a_bar, r.b_bar, p, kCalibratedSign);
  r.roots = scan_fp_roots(r.a_bar, r.b_bar, p);
  if (count_with_multiplicity(r.roots) != r.count) {
    throw InvariantViolation("sequence criterion and exhaustive scan disagree for a=" + std::to_string(r.a_bar) +
                             ", b=" + std::to_string(r.b_bar) + " mod " + std::to_string(p));
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(NormClass c) {
  switch (c) {
    case NormClass::CubeResidue: return "cube_residue";
    case NormClass::SquareResidue: return "square_residue";
    case NormClass::UnitCoefficients: return "unit_coefficients";
    case NormClass::PoleCoefficients: return "pole_coefficients";
    case NormClass::None: return "none";
  }
  return "none";
}

CubicProblem::CubicProblem(PadicNumber a_coeff, PadicNumber b_coeff) : a(std::move(a_coeff)), b(std::move(b_coeff)) {
  if (!(a.prime() == b.prime())) throw DomainError("coefficients belong to different primes");
  if (a.is_zero() || b.is_zero()) throw DomainError("the cubic x^3 + a x = b needs a, b nonzero");
}

namespace {

NormClass classify_norms(const CubicProblem& problem) {
  const int va = problem.a.valuation();
  const int vb = problem.b.valuation();
  if (va > 0 && vb == 0) return NormClass::CubeResidue;
  if (vb > 0 && va == 0) return NormClass::SquareResidue;
  if (va == 0 && vb == 0) return NormClass::UnitCoefficients;
  if (va == vb && va < 0) return NormClass::PoleCoefficients;
  return NormClass::None;
}

}  // namespace

Solvability zp_star_solvable(const CubicProblem& problem) {
  const ZpStarRootReport r = zp_star_root_count(problem);
  return {r.solvable, r.norm_class};
}

ZpStarRootReport zp_star_root_count(const CubicProblem& problem) {
  const Prime& prime = problem.prime();
  const i64 p = prime.value();
  ZpStarRootReport r;
  r.norm_class = classify_norms(problem);
  r.a0 = problem.a.leading_digit();
  r.b0 = problem.b.leading_digit();
  r.d0_integer = -4 * r.a0 * r.a0 * r.a0 - 27 * r.b0 * r.b0;
  r.u_p_minus_2 = u_sequence(r.a0, r.b0, prime, static_cast<int>(p - 2))[static_cast<std::size_t>(p - 2)];

  switch (r.norm_class) {
    case NormClass::CubeResidue: {
      const auto res = qth_power_residue(r.b0, 3, prime);
      if (!res.is_residue) {
        r.rule = "b0_not_cube";
        r.count = 0;
      } else if (p % 3 == 1) {
        r.rule = "cube_root_three";
        r.count = 3;
      } else {
        r.rule = "cube_root_one";
        r.count = 1;
      }
      break;
    }
    case NormClass::SquareResidue: {
      if (modp::is_square(modp::reduce(-r.a0, p), p)) {
        r.rule = "square_root_two";
        r.count = 2;
      } else {
        r.rule = "minus_a0_not_square";
        r.count = 0;
      }
      break;
    }
    case NormClass::UnitCoefficients: {
      const PadicNumber d = PadicNumber::from_integer(-4, prime) * problem.a.pow(3) -
                            PadicNumber::from_integer(27, prime) * problem.b.pow(2);
      r.discriminant = d;
      if (d.is_zero()) {
        r.rule = "zero_discriminant";
        r.count = 3;
        break;
      }
      const int vd = d.valuation();
      if (vd > 0) {
        r.discriminant_digit = d.leading_digit();
        if (vd % 2 != 0) {
          r.rule = "small_discriminant_odd_order";
          r.count = 1;
        } else if (modp::is_square(*r.discriminant_digit, p)) {
          r.rule = "small_discriminant_even_residue";
          r.count = 3;
        } else {
          r.rule = "small_discriminant_even_nonresidue";
          r.count = 1;
        }
        break;
      }
      const i64 d0 = modp::reduce(r.d0_integer, p);
      const i64 u = r.u_p_minus_2;
      const i64 lhs = modp::mul(d0, modp::mul(u, u, p), p);
      if (u == 0) {
        r.rule = "unit_discriminant_sequence_vanishes";
        r.count = 3;
      } else if (lhs == modp::mul(9, modp::mul(r.a0, r.a0, p), p)) {
        r.rule = "unit_discriminant_no_residue_root";
        r.count = 0;
      } else {
        r.rule = "unit_discriminant_single_root";
        r.count = 1;
      }
      break;
    }
    case NormClass::PoleCoefficients: {
      const PadicNumber as = unit_part(problem.a);
      const PadicNumber bs = unit_part(problem.b);
      auto d = PadicNumber::try_add(PadicNumber::from_integer(-4, prime) * as.pow(3),
                                    -(PadicNumber::from_integer(27, prime) * bs.pow(2)));
      if (d) {
        r.discriminant = *d;
        if (!d->is_zero() && d->valuation() > 0) r.discriminant_digit = d->leading_digit();
      }
      r.rule = "linear_leading_term";
      r.count = 1;
      break;
    }
    case NormClass::None:
      r.rule = "no_unit_root_possible";
      r.count = 0;
      break;
  }
  r.solvable = r.count > 0;
  return r;
}

// ---------------------------------------------------------------------------

std::vector<PadicNumber> zp_star_roots(const CubicProblem& problem, int target_precision) {
  const Prime& prime = problem.prime();
  const i64 p = prime.value();
  const ZpStarRootReport report = zp_star_root_count(problem);
  std::vector<PadicNumber> roots;

  auto lift_all = [&](const std::vector<i64>& seeds) {
    const auto poly = cubic_poly(problem);
    for (i64 s : seeds) roots.push_back(hensel_lift(poly, seed_value(s, prime), 0, target_precision));
  };

  switch (report.norm_class) {
    case NormClass::CubeResidue: {
      std::vector<i64> seeds;
      for (i64 x = 1; x < p; ++x) {
        if (modp::pow(x, 3, p) == modp::reduce(report.b0, p)) seeds.push_back(x);
      }
      lift_all(seeds);
      break;
    }
    case NormClass::SquareResidue: {
      if (report.count > 0) {
        const i64 s = *modp::sqrt(modp::reduce(-report.a0, p), p);
        lift_all({s, p - s});
      }
      break;
    }
    case NormClass::UnitCoefficients: {
      if (report.count == 0) break;
      const PadicNumber& a = problem.a;
      const PadicNumber& b = problem.b;
      const PadicNumber& d = *report.discriminant;
      if (d.is_zero()) {
        const PadicNumber three = PadicNumber::from_integer(3, prime);
        const PadicNumber two = PadicNumber::from_integer(2, prime);
        const PadicNumber doubled = three * b / (two * a);
        roots = {doubled, doubled, -(three * b / a)};
        break;
      }
      if (d.valuation() == 0) {
        std::vector<i64> seeds;
        for (const auto& fr : scan_fp_roots(report.a0, report.b0, p)) seeds.push_back(fr.value);
        lift_all(seeds);
        break;
      }
      // The residue cubic has a double root 3b0/(2a0) and a simple root
      // -3b0/a0.  Lift the simple one and solve the remaining quadratic.
      const i64 a0 = modp::reduce(report.a0, p);
      const i64 b0 = modp::reduce(report.b0, p);
      const i64 simple = modp::reduce(-3 * modp::mul(b0, modp::inverse(a0, p), p), p);
      const auto poly = cubic_poly(problem);
      const PadicNumber xbar = hensel_lift(poly, seed_value(simple, prime), 0, target_precision);
      roots.push_back(xbar);
      if (report.count == 1) break;

      const PadicNumber half = PadicNumber::from_rational(mpq_class(1, 2), prime);
      const PadicNumber three = PadicNumber::from_integer(3, prime);
      const PadicNumber hx = xbar * half;
      const PadicNumber delta = -(three * hx * hx + a);
      // Cross-check against the discriminant identity.
      const PadicNumber e = three * a * xbar * xbar - PadicNumber::from_integer(9, prime) * b * xbar - a * a;
      const PadicNumber via_d = d / (PadicNumber::from_integer(-4, prime) * e);
      if (!agreement(delta, via_d).indistinguishable() || delta.valuation() != d.valuation()) {
        throw InvariantViolation("quadratic factor disagrees with the discriminant identity");
      }
      const int half_order = delta.valuation() / 2;
      auto sq = sqrt_unit(unit_part(delta));
      if (!sq) throw InvariantViolation("discriminant residue predicted a square root that does not exist");
      const PadicNumber s = sq->first.shifted(half_order);
      roots.push_back(-hx + s);
      roots.push_back(-hx - s);
      break;
    }
    case NormClass::PoleCoefficients: {
      const int m = -problem.a.valuation();
      const PadicNumber as = unit_part(problem.a);
      const PadicNumber bs = unit_part(problem.b);
      const ZpPolynomial g = {-bs, as, PadicNumber::zero(prime), PadicNumber::one(prime).shifted(m)};
      const i64 seed = modp::mul(modp::reduce(report.b0, p), modp::inverse(modp::reduce(report.a0, p), p), p);
      roots.push_back(hensel_lift(g, seed_value(seed, prime), 0, target_precision));
      break;
    }
    case NormClass::None:
      break;
  }

  if (static_cast<int>(roots.size()) != report.count) {
    throw InvariantViolation("extracted " + std::to_string(roots.size()) + " roots but the count is " +
                             std::to_string(report.count));
  }
  for (const auto& x : roots) {
    if (x.is_zero() || x.valuation() != 0) throw InvariantViolation("extracted root is not a unit");
  }
  return roots;
}

// ---------------------------------------------------------------------------

int brute_force_root_count(const CubicProblem& problem, int depth, int extra) {
  if (depth < 1 || extra < 1) throw DomainError("oracle depth and extra digits must be positive");
  const Prime& prime = problem.prime();
  const i64 p = prime.value();
  if (problem.a.valuation() == 0 && problem.b.valuation() == 0) {
    // Roots that agree to h digits need h further digits to be told apart,
    // and a near-double residue root stops lifting past ord_p(D).
    auto d = PadicNumber::try_add(PadicNumber::from_integer(-4, prime) * problem.a.pow(3),
                                  -(PadicNumber::from_integer(27, prime) * problem.b.pow(2)));
    if (d && !d->is_zero() && d->valuation() > 0) {
      const int vd = d->valuation();
      depth = std::max(depth, vd / 2 + 1);
      extra = std::max(extra, vd + 1);
    } else if (d && d->is_zero()) {
      extra = std::max(extra, depth);
    }
  }
  const int top = depth + extra;

  // Modulus must stay below 2^62 so products fit in 128 bits comfortably.
  u128 modulus_wide = 1;
  for (int k = 0; k < top; ++k) {
    modulus_wide *= static_cast<u128>(p);
    if (modulus_wide >= (static_cast<u128>(1) << 62)) {
      throw ResourceError("oracle modulus p^" + std::to_string(top) + " exceeds word-size arithmetic");
    }
  }
  const u128 m = modulus_wide;

  // Clear denominators: p^M x^3 + p^M a x - p^M b.
  const int shift = std::max({0, -problem.a.valuation(), -problem.b.valuation()});
  auto coeff = [&](const PadicNumber& c) -> u128 {
    mpz_class r = c.shifted(shift).residue(top);
    return static_cast<u128>(std::stoull(r.get_str()));
  };
  const u128 c3 = shift >= top ? 0 : static_cast<u128>(std::stoull(prime.power(shift).get_str()));
  const u128 c1 = coeff(problem.a);
  const u128 c0 = (m - coeff(problem.b)) % m;

  auto f = [&](u128 x) -> u128 {
    u128 x2 = x * x % m;
    u128 x3 = x2 * x % m;
    return (c3 * x3 % m + c1 * x % m + c0) % m;
  };

  constexpr std::size_t kBudget = 2'000'000;
  std::vector<u128> level;
  for (i64 r = 1; r < p; ++r) {
    if (f(static_cast<u128>(r)) % static_cast<u128>(p) == 0) level.push_back(static_cast<u128>(r));
  }
  std::vector<std::vector<u128>> levels{level};
  u128 pj = static_cast<u128>(p);
  for (int j = 1; j < top; ++j) {
    const u128 next_mod = pj * static_cast<u128>(p);
    std::vector<u128> next;
    for (u128 r : levels.back()) {
      for (i64 t = 0; t < p; ++t) {
        u128 x = r + static_cast<u128>(t) * pj;
        if (f(x) % next_mod == 0) next.push_back(x);
      }
      if (next.size() > kBudget) throw ResourceError("oracle enumeration exceeded its budget");
    }
    levels.push_back(std::move(next));
    pj = next_mod;
  }

  u128 pk = 1;
  for (int k = 0; k < depth; ++k) pk *= static_cast<u128>(p);
  std::set<u128> survivors;
  for (u128 x : levels.back()) survivors.insert(x % pk);
  return static_cast<int>(survivors.size());
}

}  // namespace padic

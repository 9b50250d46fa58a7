#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "padic/cubic.hpp"
#include "padic/errors.hpp"
#include "padic/modular.hpp"

using padic::CubicProblem;
using padic::NormClass;
using padic::PadicNumber;
using padic::Prime;

namespace {

PadicNumber num(long n, const Prime& p) { return PadicNumber::from_integer(n, p); }

// Full scan of units mod p^k with f(x) == 0 mod p^(k + extra) for some lift;
// independent of the level-by-level search in the library oracle.
int naive_unit_root_classes(long p, long a, long b, int k, int extra) {
  long mk = 1;
  for (int i = 0; i < k; ++i) mk *= p;
  long big = mk;
  for (int i = 0; i < extra; ++i) big *= p;
  std::set<long> classes;
  for (long x = 0; x < big; ++x) {
    if (x % p == 0) continue;
    __int128 f = (static_cast<__int128>(x) * x % big * x + static_cast<__int128>(a) * x - b) % big;
    if (f < 0) f += big;
    if (f == 0) classes.insert(x % mk);
  }
  return static_cast<int>(classes.size());
}

void expect_roots_solve(const CubicProblem& problem, const std::vector<PadicNumber>& roots, int precision) {
  for (const auto& x : roots) {
    EXPECT_EQ(x.valuation(), 0);
    auto f = PadicNumber::try_add(x.pow(3) + problem.a * x, -problem.b);
    if (f) EXPECT_GE(f->valuation(), std::min(precision, x.absolute_precision()));
  }
}

}  // namespace

TEST(PowerResidue, Examples) {
  Prime p7(7);
  auto r = padic::qth_power_residue(1, 3, p7);
  EXPECT_TRUE(r.is_residue);
  EXPECT_EQ(r.solution_count, 3);
  EXPECT_FALSE(padic::qth_power_residue(2, 3, p7).is_residue);
  EXPECT_EQ(padic::qth_power_residue(2, 3, p7).solution_count, 0);
  r = padic::qth_power_residue(4, 2, p7);
  EXPECT_TRUE(r.is_residue);
  EXPECT_EQ(r.solution_count, 2);
  EXPECT_THROW(padic::qth_power_residue(7, 2, p7), padic::DomainError);
}

TEST(PowerResidue, MatchesExhaustiveCount) {
  for (long p : {5L, 7L, 11L, 13L, 19L}) {
    Prime prime(p);
    for (int q = 1; q <= 6; ++q) {
      for (long a = 1; a < p; ++a) {
        int count = 0;
        for (long x = 1; x < p; ++x) count += padic::modp::pow(x, q, p) == a;
        auto r = padic::qth_power_residue(a, q, prime);
        EXPECT_EQ(r.solution_count, count) << "p=" << p << " q=" << q << " a=" << a;
        EXPECT_EQ(r.is_residue, count > 0);
      }
    }
  }
}

TEST(Hensel, Examples) {
  Prime p7(7);
  PadicNumber r = padic::hensel_lift({num(-1, p7), num(0, p7), num(1, p7)}, num(1, p7), 0, 20);
  EXPECT_EQ(r.residue(20), 1);

  padic::ZpPolynomial f = {num(-2, p7), num(1, p7), num(0, p7), num(1, p7)};
  PadicNumber x = padic::hensel_lift(f, num(1, p7), 0, 20);
  EXPECT_EQ(x.residue(1), 1);
  EXPECT_EQ(x.absolute_precision(), 20);

  padic::ZpPolynomial g = {num(3, p7), num(0, p7), num(1, p7)};
  PadicNumber s = padic::hensel_lift(g, num(2, p7), 0, 20);
  EXPECT_EQ(s.residue(1), 2);
  EXPECT_TRUE(padic::agreement(s * s, num(-3, p7)).indistinguishable());

  EXPECT_THROW(padic::hensel_lift(g, num(1, p7), 0, 20), padic::HypothesisError);
}

TEST(Hensel, NonzeroContactOrder) {
  // f = (x - 1)(x - 8): both roots have ord_7 f' = 1.
  Prime p7(7);
  padic::ZpPolynomial f = {num(8, p7), num(-9, p7), num(1, p7)};
  PadicNumber x = padic::hensel_lift(f, num(1 + 343, p7), 1, 15);
  EXPECT_EQ(x.residue(15), 1);
  PadicNumber y = padic::hensel_lift(f, num(8, p7), 1, 15);
  EXPECT_EQ(y.residue(15), 8);
  EXPECT_THROW(padic::hensel_lift(f, num(2, p7), 1, 15), padic::HypothesisError);
  EXPECT_THROW(padic::hensel_lift(f, num(1 + 343, p7), 0, 15), padic::HypothesisError);
}

TEST(USequence, InitialTermsAndRecurrence) {
  Prime p7(7);
  auto u = padic::u_sequence(1, 2, p7, 5);
  EXPECT_EQ(u[1], 0);
  EXPECT_EQ(u[2], 6);  // -1
  EXPECT_EQ(u[3], 2);
  // u4 = b u1 - a u2 = 0 - 6 = 1 mod 7; u5 = b u2 - a u3 = 12 - 2 = 10 = 3
  EXPECT_EQ(u[4], 1);
  EXPECT_EQ(u[5], 3);

  Prime p5(5);
  auto neg = padic::u_sequence(4, 2, p5, 3, padic::UThreeSign::Negative);
  EXPECT_EQ(neg[3], padic::modp::reduce(-2, 5));
  EXPECT_EQ(padic::u_sequence(4, 2, p5, 3)[2], padic::modp::reduce(-4, 5));
}

TEST(USequence, CalibrationPicksPositiveSign) {
  const std::vector<std::int64_t> primes = {5, 7, 11, 13};
  auto cal = padic::calibrate_u3_sign(primes);
  EXPECT_EQ(cal.sign, padic::UThreeSign::Positive);
  EXPECT_EQ(cal.mismatches_positive, 0);
  EXPECT_GT(cal.mismatches_negative, 0);
  EXPECT_EQ(cal.pairs_checked, 16 + 36 + 100 + 144);
  EXPECT_EQ(cal.sign, padic::kCalibratedSign);
}

TEST(FpCubic, Examples) {
  Prime p5(5);
  auto r = padic::count_roots_fp_cubic(4, 2, p5);
  EXPECT_EQ(r.count, 0);
  EXPECT_TRUE(r.roots.empty());

  Prime p7(7);
  // x^3 + x - 2 = (x - 1)(x - 3)^2 mod 7: D = -112 vanishes mod 7.
  r = padic::count_roots_fp_cubic(1, 2, p7);
  EXPECT_EQ(r.discriminant, 0);
  EXPECT_EQ(r.count, 3);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.roots[0].value, 1);
  EXPECT_TRUE(r.roots[0].simple);
  EXPECT_EQ(r.roots[1].value, 3);
  EXPECT_EQ(r.roots[1].multiplicity, 2);

  EXPECT_THROW(padic::count_roots_fp_cubic(0, 2, p7), padic::DomainError);
}

TEST(FpCubic, DoubleRootStructure) {
  for (long p : {5L, 7L, 11L, 13L, 17L}) {
    Prime prime(p);
    for (long a = 1; a < p; ++a) {
      for (long b = 1; b < p; ++b) {
        auto r = padic::count_roots_fp_cubic(a, b, prime);
        if (r.discriminant != 0) continue;
        ASSERT_EQ(r.roots.size(), 2u);
        const long two_a_inv = padic::modp::inverse(2 * a, p);
        const long double_root = padic::modp::mul(3 * b % p, two_a_inv, p);
        const long simple_root = padic::modp::reduce(-3 * padic::modp::mul(b, padic::modp::inverse(a, p), p), p);
        for (const auto& root : r.roots) {
          if (root.value == double_root) {
            EXPECT_EQ(root.multiplicity, 2);
            EXPECT_FALSE(root.simple);
          } else {
            EXPECT_EQ(root.value, simple_root);
            EXPECT_TRUE(root.simple);
          }
        }
        EXPECT_EQ(r.count, 3);
      }
    }
  }
}

TEST(ZpStar, TableExamples) {
  Prime p7(7);
  CubicProblem simple(num(1, p7), num(2, p7));
  auto r = padic::zp_star_root_count(simple);
  EXPECT_EQ(r.count, 1);
  EXPECT_EQ(r.norm_class, NormClass::UnitCoefficients);
  ASSERT_TRUE(r.discriminant.has_value());
  EXPECT_EQ(r.discriminant->valuation(), 1);  // D = -112 = -16 * 7
  EXPECT_EQ(r.rule, "small_discriminant_odd_order");
  auto roots = padic::zp_star_roots(simple, 20);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].residue(20), 1);

  Prime p5(5);
  CubicProblem example(num(4, p5), num(2, p5));
  EXPECT_EQ(padic::zp_star_root_count(example).count, 0);
  EXPECT_TRUE(padic::zp_star_roots(example, 20).empty());
  EXPECT_FALSE(padic::zp_star_solvable(example).solvable);

  CubicProblem pole(PadicNumber::from_rational(-1, 7, p7), PadicNumber::from_rational(3, 7, p7));
  auto pr = padic::zp_star_root_count(pole);
  EXPECT_EQ(pr.norm_class, NormClass::PoleCoefficients);
  EXPECT_EQ(pr.count, 1);
  auto pole_roots = padic::zp_star_roots(pole, 20);
  ASSERT_EQ(pole_roots.size(), 1u);
  expect_roots_solve(pole, pole_roots, 19);

  EXPECT_THROW(CubicProblem(PadicNumber::zero(p7), num(1, p7)), padic::DomainError);
}

TEST(ZpStar, SolvabilityCases) {
  Prime p7(7);
  // |a| < |b| = 1 with b0 = 1 a cube residue.
  auto s = padic::zp_star_solvable(CubicProblem(num(7, p7), num(1, p7)));
  EXPECT_TRUE(s.solvable);
  EXPECT_EQ(s.norm_class, NormClass::CubeResidue);
  // |a| = |b| = 7
  s = padic::zp_star_solvable(CubicProblem(PadicNumber::from_rational(1, 7, p7), PadicNumber::from_rational(2, 7, p7)));
  EXPECT_TRUE(s.solvable);
  EXPECT_EQ(s.norm_class, NormClass::PoleCoefficients);
  // norms outside the trichotomy
  s = padic::zp_star_solvable(CubicProblem(num(49, p7), num(7, p7)));
  EXPECT_FALSE(s.solvable);
  EXPECT_EQ(s.norm_class, NormClass::None);
}

TEST(ZpStar, ZeroDiscriminantDoubleRoot) {
  // x^3 - 3x + 2 = (x - 1)^2 (x + 2): D = 108 - 108 = 0
  Prime p7(7);
  CubicProblem problem(num(-3, p7), num(-2, p7));
  auto r = padic::zp_star_root_count(problem);
  EXPECT_EQ(r.rule, "zero_discriminant");
  EXPECT_EQ(r.count, 3);
  auto roots = padic::zp_star_roots(problem, 20);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_TRUE(padic::agreement(roots[0], num(1, p7)).exact);
  EXPECT_TRUE(padic::agreement(roots[1], num(1, p7)).exact);
  EXPECT_TRUE(padic::agreement(roots[2], num(-2, p7)).exact);
}

TEST(ZpStar, NearDoubleRootBranch) {
  // (x - 1)(x - 1 - 49)(x + 2 + 49) has a, b units and ord_7(D) = 4.
  Prime p7(7);
  const long r1 = 1, r2 = 50, r3 = -51;
  const long a = r1 * r2 + r1 * r3 + r2 * r3;
  const long b = r1 * r2 * r3;
  CubicProblem problem(num(a, p7), num(b, p7));
  auto rep = padic::zp_star_root_count(problem);
  ASSERT_TRUE(rep.discriminant.has_value());
  EXPECT_EQ(rep.discriminant->valuation(), 4);
  EXPECT_EQ(rep.count, 3);
  auto roots = padic::zp_star_roots(problem, 20);
  ASSERT_EQ(roots.size(), 3u);
  std::set<std::string> found;
  for (const auto& x : roots) found.insert(x.residue(12).get_str());
  for (long r : {r1, r2, r3}) EXPECT_TRUE(found.count(num(r, p7).residue(12).get_str())) << r;
  EXPECT_EQ(padic::brute_force_root_count(problem, 3), 3);
}

TEST(Oracle, Examples) {
  Prime p7(7);
  EXPECT_EQ(padic::brute_force_root_count(CubicProblem(num(1, p7), num(2, p7)), 6), 1);
  Prime p5(5);
  EXPECT_EQ(padic::brute_force_root_count(CubicProblem(num(4, p5), num(2, p5)), 6), 0);
  EXPECT_THROW(padic::brute_force_root_count(CubicProblem(num(1, p7), num(2, p7)), 30), padic::ResourceError);
}

TEST(Oracle, LevelSearchMatchesFullScan) {
  std::mt19937_64 rng(21);
  for (long p : {5L, 7L}) {
    Prime prime(p);
    for (int trial = 0; trial < 40; ++trial) {
      long a = static_cast<long>(rng() % 2000) - 1000;
      long b = static_cast<long>(rng() % 2000) - 1000;
      if (a == 0 || b == 0) continue;
      CubicProblem problem(num(a, prime), num(b, prime));
      EXPECT_EQ(padic::brute_force_root_count(problem, 3, 2), naive_unit_root_classes(p, a, b, 3, 2))
          << "p=" << p << " a=" << a << " b=" << b;
    }
  }
}

TEST(ZpStar, RandomizedAgainstOracle) {
  std::mt19937_64 rng(5);
  for (long p : {5L, 7L, 11L, 13L}) {
    Prime prime(p);
    for (int trial = 0; trial < 150; ++trial) {
      const int va = static_cast<int>(rng() % 4) - 1;
      const int vb = rng() % 3 == 0 ? va : static_cast<int>(rng() % 4) - 1;
      long ua = static_cast<long>(rng() % 5000) + 1;
      long ub = static_cast<long>(rng() % 5000) + 1;
      if (ua % p == 0) ++ua;
      if (ub % p == 0) ++ub;
      if (rng() % 2) ua = -ua;
      CubicProblem problem(num(ua, prime).shifted(va), num(ub, prime).shifted(vb));
      auto rep = padic::zp_star_root_count(problem);
      int distinct = rep.count;
      if (rep.rule == "zero_discriminant") distinct = 2;
      EXPECT_EQ(distinct, padic::brute_force_root_count(problem, 4)) << "p=" << p << " a=" << ua << "p^" << va
                                                                    << " b=" << ub << "p^" << vb;
      auto roots = padic::zp_star_roots(problem, 16);
      EXPECT_EQ(static_cast<int>(roots.size()), rep.count);
      expect_roots_solve(problem, roots, 16);
    }
  }
}

#include <gtest/gtest.h>

#include <vector>

#include "padic/errors.hpp"
#include "padic/literal.hpp"
#include "padic/modular.hpp"
#include "padic/padic_number.hpp"
#include "padic_properties.hpp"

using padic::PadicNumber;
using padic::Prime;

namespace {

// Base-p digits of n^{-1} mod p^k by the extended Euclidean algorithm.
std::vector<int> inverse_digits(long n, long p, int k) {
  long m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  long old_r = n, r = m, old_s = 1, s = 0;
  while (r != 0) {
    long q = old_r / r;
    long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  long inv = ((old_s % m) + m) % m;
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    out.push_back(static_cast<int>(inv % p));
    inv /= p;
  }
  return out;
}

}  // namespace

TEST(Prime, RejectsSmallAndComposite) {
  EXPECT_THROW(Prime(2), padic::DomainError);
  EXPECT_THROW(Prime(3), padic::DomainError);
  EXPECT_THROW(Prime(9), padic::DomainError);
  EXPECT_NO_THROW(Prime(5));
  EXPECT_EQ(Prime(7).power(3), 343);
}

TEST(ParseRational, UnitDigits) {
  Prime p5(5);
  PadicNumber one = PadicNumber::from_rational(1, 1, p5);
  EXPECT_EQ(one.valuation(), 0);
  EXPECT_EQ(one.digits().front(), 1);

  PadicNumber third = PadicNumber::from_rational(1, 3, p5);
  EXPECT_EQ(third.valuation(), 0);
  std::vector<int> d = third.digits();
  std::vector<int> expected = inverse_digits(3, 5, 12);
  ASSERT_GE(d.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(d[i], expected[i]) << "digit " << i;
  EXPECT_EQ(d[0], 2);
  EXPECT_EQ(d[1], 3);
  EXPECT_EQ(d[2], 1);

  PadicNumber ten = PadicNumber::from_rational(10, 1, p5);
  EXPECT_EQ(ten.valuation(), 1);
  EXPECT_EQ(ten.leading_digit(), 2);

  EXPECT_THROW(PadicNumber::from_rational(1, 0, p5), padic::DomainError);
}

TEST(Norm, Examples) {
  Prime p5(5);
  EXPECT_EQ(PadicNumber::from_rational(1, 5, p5).norm().exponent(), 1);
  EXPECT_EQ(PadicNumber::from_integer(13, p5).norm().exponent(), 0);
  EXPECT_EQ(PadicNumber::from_rational(25, 3, p5).norm().exponent(), -2);
  EXPECT_TRUE(PadicNumber::zero(p5).norm().is_zero());
  EXPECT_LT(PadicNumber::zero(p5).norm(), padic::Norm::power(-100));
}

TEST(Arithmetic, ExactCancellationGivesZero) {
  Prime p5(5);
  PadicNumber x = PadicNumber::from_rational(7, 3, p5);
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_TRUE((x - x).is_exact());
}

TEST(Arithmetic, TruncatedCancellationIsPrecisionError) {
  Prime p5(5);
  PadicNumber x = PadicNumber::from_rational(7, 3, p5).truncated(10);
  EXPECT_THROW(x - x, padic::PrecisionError);
  EXPECT_FALSE(PadicNumber::try_add(x, -x).has_value());
}

TEST(Arithmetic, SmallExamples) {
  Prime p5(5);
  PadicNumber prod = PadicNumber::from_integer(5, p5) * PadicNumber::from_rational(1, 5, p5);
  ASSERT_TRUE(prod.is_exact());
  EXPECT_EQ(*prod.exact_value(), 1);

  PadicNumber s = PadicNumber::from_integer(1, p5) + PadicNumber::from_integer(5, p5);
  EXPECT_EQ(s.norm().exponent(), 0);
  EXPECT_EQ(s.digits()[0], 1);
  EXPECT_EQ(s.digits()[1], 1);

  EXPECT_THROW(PadicNumber::one(p5) / PadicNumber::zero(p5), padic::DomainError);
  EXPECT_THROW(PadicNumber::one(p5) + PadicNumber::one(Prime(7)), padic::DomainError);
}

TEST(Arithmetic, PrecisionPropagation) {
  Prime p7(7);
  PadicNumber x = PadicNumber::from_rational(2, 3, p7).truncated(10);              // abs 10
  PadicNumber y = PadicNumber::from_rational(49, 5, p7).truncated(6);              // v=2, abs 6
  EXPECT_EQ((x + y).absolute_precision(), 6);
  EXPECT_EQ((x * y).precision(), std::min(x.precision(), y.precision()));
  PadicNumber mixed = x + PadicNumber::from_integer(1, p7);
  EXPECT_EQ(mixed.absolute_precision(), 10);
  EXPECT_FALSE(mixed.is_exact());
}

TEST(Arithmetic, PowMatchesRepeatedProduct) {
  Prime p11(11);
  PadicNumber x = PadicNumber::from_rational(22, 7, p11);
  PadicNumber r = PadicNumber::one(p11);
  for (int i = 0; i < 7; ++i) r *= x;
  EXPECT_TRUE(padic::agreement(x.pow(7), r).exact);
  EXPECT_TRUE(padic::agreement(x.pow(-2) * x.pow(2), PadicNumber::one(p11)).exact);
}

TEST(Exp, Examples) {
  Prime p5(5);
  EXPECT_TRUE(padic::agreement(padic::exp_p(PadicNumber::zero(p5)), PadicNumber::one(p5)).exact);
  PadicNumber e = padic::exp_p(PadicNumber::from_integer(5, p5));
  EXPECT_EQ((e - PadicNumber::one(p5)).norm().exponent(), -1);
  EXPECT_TRUE(padic::is_in_Ep(e));

  // Exact rational partial sums of exp(5); terms n >= 4 vanish mod 5^3.
  mpq_class sum = 0;
  mpq_class term = 1;
  for (int n = 0; n <= 30; ++n) {
    if (n > 0) term = term * 5 / n;
    sum += term;
  }
  PadicNumber oracle = PadicNumber::from_rational(sum, p5);
  EXPECT_EQ(e.residue(3), oracle.residue(3));
  EXPECT_EQ(e.residue(20), oracle.residue(20));

  EXPECT_THROW(padic::exp_p(PadicNumber::one(p5)), padic::DomainError);
  EXPECT_THROW(padic::exp_p(PadicNumber::from_rational(1, 5, p5)), padic::DomainError);
}

TEST(Log, Examples) {
  Prime p5(5);
  EXPECT_TRUE(padic::log_p(PadicNumber::one(p5)).is_zero());
  PadicNumber x = PadicNumber::from_integer(5, p5);
  EXPECT_TRUE(padic::agreement(padic::log_p(padic::exp_p(x)), x).indistinguishable());
  EXPECT_EQ(padic::log_p(PadicNumber::from_integer(26, p5)).norm().exponent(), -2);
  EXPECT_THROW(padic::log_p(PadicNumber::from_integer(2, p5)), padic::DomainError);
  EXPECT_THROW(padic::log_p(PadicNumber::from_integer(5, p5)), padic::DomainError);
}

TEST(SqrtUnit, Examples) {
  Prime p7(7);
  auto r = padic::sqrt_unit(PadicNumber::from_integer(4, p7));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->first.residue(10), 2);
  EXPECT_EQ(r->second.residue(10), PadicNumber::from_integer(-2, p7).residue(10));

  PadicNumber m3 = PadicNumber::from_integer(-3, p7);
  auto s = padic::sqrt_unit(m3);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(padic::agreement(s->first * s->first, m3).indistinguishable());
  EXPECT_TRUE(padic::agreement(s->second * s->second, m3).indistinguishable());

  EXPECT_FALSE(padic::sqrt_unit(PadicNumber::from_integer(-3, Prime(5))).has_value());
  EXPECT_THROW(padic::sqrt_unit(PadicNumber::from_integer(7, p7)), padic::DomainError);
}

TEST(Ep, Membership) {
  Prime p5(5);
  EXPECT_TRUE(padic::is_in_Ep(PadicNumber::one(p5)));
  EXPECT_TRUE(padic::is_in_Ep(PadicNumber::from_integer(126, p5)));
  EXPECT_FALSE(padic::is_in_Ep(PadicNumber::from_integer(5, p5)));
  EXPECT_FALSE(padic::is_in_Ep(PadicNumber::from_integer(2, p5)));
  EXPECT_FALSE(padic::is_in_Ep(PadicNumber::zero(p5)));
}

TEST(Modp, SqrtAndInverse) {
  for (long p : {5L, 7L, 11L, 13L, 101L}) {
    for (long a = 1; a < p; ++a) {
      EXPECT_EQ(padic::modp::mul(a, padic::modp::inverse(a, p), p), 1);
      auto r = padic::modp::sqrt(a, p);
      EXPECT_EQ(r.has_value(), padic::modp::is_square(a, p));
      if (r) EXPECT_EQ(padic::modp::mul(*r, *r, p), a);
    }
  }
}

TEST(Literal, ParsesBothForms) {
  Prime p5(5);
  PadicNumber a = padic::parse_literal("25/3", p5);
  ASSERT_TRUE(a.is_exact());
  EXPECT_EQ(*a.exact_value(), mpq_class(25, 3));

  PadicNumber b = padic::parse_literal("5^-1 * (2 + 3*5 + 4*5^2 + ...)", p5);
  EXPECT_FALSE(b.is_exact());
  EXPECT_EQ(b.valuation(), -1);
  EXPECT_EQ(b.absolute_precision(), 2);
  EXPECT_EQ(b.digits(), (std::vector<int>{2, 3, 4}));

  PadicNumber c = padic::parse_literal("p^2 * (1 + 1*p)", p5);
  ASSERT_TRUE(c.is_exact());
  EXPECT_EQ(*c.exact_value(), 150);

  EXPECT_THROW(padic::parse_literal("1/0", p5), padic::DomainError);
  EXPECT_THROW(padic::parse_literal("7^1 * (1)", p5), padic::ParseError);
  EXPECT_THROW(padic::parse_literal("2 + ", p5), padic::ParseError);
}

// ---------------------------------------------------------------------------

constexpr long kPropertyCases = 10000;

TEST(Properties, UltrametricLaw) {
  auto r = padic_properties::ultrametric_law(11, kPropertyCases);
  EXPECT_EQ(r.cases, kPropertyCases);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, NormMultiplicativity) {
  auto r = padic_properties::norm_multiplicativity(12, kPropertyCases);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, ProductBound) {
  auto r = padic_properties::product_bound(13, kPropertyCases);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, ExpLogRoundTrip) {
  auto r = padic_properties::exp_log_round_trip(14, kPropertyCases);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, LiteralRoundTrip) {
  auto r = padic_properties::literal_round_trip(15, kPropertyCases);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

#pragma once

#include <gmpxx.h>

#include <climits>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "padic/prime.hpp"

namespace padic {

/// Working precision for values created from rationals and for series
/// truncation.  Digits are counted relative to the valuation.
struct PrecisionContext {
  static constexpr int kMinDigits = 8;
  static constexpr int kDefaultDigits = 32;

  int default_digits = kDefaultDigits;

  /// Throws DomainError when digits < kMinDigits or beyond the power table.
  static PrecisionContext with_digits(int digits);
};

/// |x|_p stored as the exponent e with |x|_p = p^e, or the distinguished zero.
class Norm {
 public:
  static Norm zero() { return Norm(true, 0); }
  static Norm power(int exponent) { return Norm(false, exponent); }

  bool is_zero() const { return zero_; }
  /// DomainError for the zero norm.
  int exponent() const;

  friend bool operator==(const Norm&, const Norm&) = default;
  friend std::strong_ordering operator<=>(const Norm& a, const Norm& b);

 private:
  Norm(bool zero, int exponent) : zero_(zero), exponent_(exponent) {}
  bool zero_;
  int exponent_;
};

/// An element of Q_p in canonical form p^v (d_0 + d_1 p + ... ), d_0 != 0.
///
/// Two kinds of value are represented:
///   * exact values, which carry the rational they came from and stay exact
///     under field operations with other exact values;
///   * truncated values, known only modulo p^(v + precision).
///
/// Mixed operations expand the exact operand to whatever precision the
/// truncated one supports, so absolute precision of a sum is the minimum of
/// the operands' absolute precisions and relative precision of a product is the
/// minimum of the relative precisions.  A truncated result whose leading digit
/// is not determined raises PrecisionError; only exact arithmetic produces zero.
class PadicNumber {
 public:
  /// Exact values whose numerator plus denominator exceed this many bits are
  /// demoted to truncated values.
  static constexpr std::size_t kExactBitBudget = 4096;

  static PadicNumber zero(const Prime& prime);
  static PadicNumber one(const Prime& prime, const PrecisionContext& ctx = {});
  static PadicNumber from_integer(long value, const Prime& prime, const PrecisionContext& ctx = {});
  static PadicNumber from_rational(const mpq_class& value, const Prime& prime,
                                   const PrecisionContext& ctx = {});
  /// DomainError when den == 0.
  static PadicNumber from_rational(const mpz_class& num, const mpz_class& den, const Prime& prime,
                                   const PrecisionContext& ctx = {});

  /// Truncated value p^valuation * unit with unit known modulo p^precision.
  /// `unit` is reduced; DomainError when it is divisible by p.
  static PadicNumber from_unit(const Prime& prime, int valuation, const mpz_class& unit, int precision);

  /// Truncated value known modulo p^abs_precision.  PrecisionError if the
  /// residue vanishes.
  static PadicNumber from_residue(const Prime& prime, const mpz_class& residue, int abs_precision);

  const Prime& prime() const { return prime_; }
  bool is_zero() const { return zero_; }
  bool is_exact() const { return exact_.has_value() || zero_; }
  const std::optional<mpq_class>& exact_value() const { return exact_; }

  /// ord_p(x); DomainError on zero.
  int valuation() const;
  Norm norm() const;
  /// Number of known unit digits (rendering digits for exact values).
  int precision() const { return precision_; }
  /// valuation + precision; INT_MAX for exact values.
  int absolute_precision() const;
  /// The unit part modulo p^precision.
  const mpz_class& unit() const { return unit_; }
  std::vector<int> digits() const;
  int leading_digit() const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator-(const PadicNumber& x, const PadicNumber& y);
  friend PadicNumber operator*(const PadicNumber& x, const PadicNumber& y);
  /// DomainError on exact-zero divisor.
  friend PadicNumber operator/(const PadicNumber& x, const PadicNumber& y);
  PadicNumber& operator+=(const PadicNumber& y) { return *this = *this + y; }
  PadicNumber& operator-=(const PadicNumber& y) { return *this = *this - y; }
  PadicNumber& operator*=(const PadicNumber& y) { return *this = *this * y; }
  PadicNumber& operator/=(const PadicNumber& y) { return *this = *this / y; }

  PadicNumber inverse() const;
  PadicNumber pow(long exponent) const;

  /// Multiplication by p^k; keeps exactness and relative precision.
  PadicNumber shifted(int k) const;

  /// The same value known only modulo p^abs_precision (never gains digits).
  PadicNumber truncated(int abs_precision) const;

  /// x mod p^k for valuation >= 0.  DomainError for non-integral x,
  /// PrecisionError when fewer than k absolute digits are known.
  mpz_class residue(int k) const;

  /// x + y, or nullopt when the sum cancels below the tracked precision.
  static std::optional<PadicNumber> try_add(const PadicNumber& x, const PadicNumber& y);

 private:
  explicit PadicNumber(const Prime& prime) : prime_(prime) {}
  static PadicNumber make_exact(const mpq_class& value, const Prime& prime, int digits);
  /// Unit part of an exact value expanded to `digits` digits.
  mpz_class exact_unit(int digits) const;
  /// Unit digits available for a mixed operation; exact values expand on demand.
  mpz_class unit_to(int digits) const;

  Prime prime_;
  bool zero_ = false;
  int valuation_ = 0;
  int precision_ = 0;
  mpz_class unit_;
  std::optional<mpq_class> exact_;
};

/// How far two values are known to agree: x == y mod p^digits.
struct Agreement {
  int digits = 0;
  /// The difference vanished at the tracked precision; digits is that bound.
  bool limited_by_precision = false;
  /// Both values are exact and equal.
  bool exact = false;

  /// True when no difference is visible at the tracked precision.
  bool indistinguishable() const { return exact || limited_by_precision; }
};

Agreement agreement(const PadicNumber& x, const PadicNumber& y);

/// ord_p of a nonzero integer.
int valuation_of(const mpz_class& n, std::int64_t p);

/// p-adic exponential on |x|_p <= 1/p, summed to absolute precision ctx.default_digits.
PadicNumber exp_p(const PadicNumber& x, const PrecisionContext& ctx = {});

/// p-adic logarithm on |x - 1|_p < 1, summed to absolute precision ctx.default_digits.
PadicNumber log_p(const PadicNumber& x, const PrecisionContext& ctx = {});

/// Both square roots of a unit, or nullopt when its leading digit is a
/// non-residue.  DomainError for non-units.
std::optional<std::pair<PadicNumber, PadicNumber>> sqrt_unit(const PadicNumber& a);

/// Membership in {x : |x|_p = 1, |x - 1|_p < p^(-1/(p-1))}, the image of exp_p.
bool is_in_Ep(const PadicNumber& x);

}  // namespace padic

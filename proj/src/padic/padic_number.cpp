#include "padic/padic_number.hpp"

#include <algorithm>
#include <string>

#include "padic/errors.hpp"
#include "padic/modular.hpp"

namespace padic {

namespace {

unsigned long as_ulong(std::int64_t p) { return static_cast<unsigned long>(p); }

// Removes all factors of p from n (nonzero) and returns how many were removed.
int strip_p(mpz_class& n, std::int64_t p) {
  mpz_class pz = as_ulong(p);
  return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

mpz_class mod_power(const mpz_class& n, const mpz_class& modulus) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

mpz_class invert_mod(const mpz_class& n, const mpz_class& modulus) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw DomainError("element is not invertible modulo p^k");
  }
  return r;
}

constexpr int kInfinite = INT_MAX;

}  // namespace

// ---------------------------------------------------------------------------

PrecisionContext PrecisionContext::with_digits(int digits) {
  if (digits < kMinDigits) {
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
  if (digits > Prime::kMaxPower / 4) {
    throw ResourceError("precision of " + std::to_string(digits) + " digits is not supported");
  }
  return PrecisionContext{digits};
}

int Norm::exponent() const {
  if (zero_) throw DomainError("the zero norm has no exponent");
  return exponent_;
}

std::strong_ordering operator<=>(const Norm& a, const Norm& b) {
  if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
  return a.exponent_ <=> b.exponent_;
}

int valuation_of(const mpz_class& n, std::int64_t p) {
  if (n == 0) throw DomainError("valuation of zero");
  mpz_class m = n;
  return strip_p(m, p);
}

// ---------------------------------------------------------------------------

PadicNumber PadicNumber::zero(const Prime& prime) {
  PadicNumber z(prime);
  z.zero_ = true;
  z.exact_ = mpq_class(0);
  return z;
}

PadicNumber PadicNumber::one(const Prime& prime, const PrecisionContext& ctx) {
  return from_integer(1, prime, ctx);
}

PadicNumber PadicNumber::from_integer(long value, const Prime& prime, const PrecisionContext& ctx) {
  return make_exact(mpq_class(value), prime, ctx.default_digits);
}

PadicNumber PadicNumber::from_rational(const mpq_class& value, const Prime& prime,
                                       const PrecisionContext& ctx) {
  mpq_class v = value;
  v.canonicalize();
  return make_exact(v, prime, ctx.default_digits);
}

PadicNumber PadicNumber::from_rational(const mpz_class& num, const mpz_class& den, const Prime& prime,
                                       const PrecisionContext& ctx) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  return make_exact(v, prime, ctx.default_digits);
}

PadicNumber PadicNumber::make_exact(const mpq_class& value, const Prime& prime, int digits) {
  if (value == 0) return zero(prime);
  PadicNumber x(prime);
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  int vn = strip_p(num, prime.value());
  int vd = strip_p(den, prime.value());
  x.valuation_ = vn - vd;
  x.precision_ = digits;
  const mpz_class& modulus = prime.power(digits);
  x.unit_ = mod_power(num * invert_mod(den, modulus), modulus);
  std::size_t bits = mpz_sizeinbase(value.get_num_mpz_t(), 2) + mpz_sizeinbase(value.get_den_mpz_t(), 2);
  if (bits <= kExactBitBudget) x.exact_ = value;
  return x;
}

PadicNumber PadicNumber::from_unit(const Prime& prime, int valuation, const mpz_class& unit, int precision) {
  if (precision < 1) throw PrecisionError("a nonzero value needs at least one known digit");
  PadicNumber x(prime);
  x.valuation_ = valuation;
  x.precision_ = precision;
  x.unit_ = mod_power(unit, prime.power(precision));
  if (x.unit_ % as_ulong(prime.value()) == 0) {
    throw DomainError("unit part must not be divisible by p");
  }
  return x;
}

PadicNumber PadicNumber::from_residue(const Prime& prime, const mpz_class& residue, int abs_precision) {
  mpz_class r = mod_power(residue, prime.power(std::max(abs_precision, 0)));
  if (abs_precision <= 0 || r == 0) {
    throw PrecisionError("value vanishes modulo p^" + std::to_string(abs_precision));
  }
  int v = strip_p(r, prime.value());
  return from_unit(prime, v, r, abs_precision - v);
}

// ---------------------------------------------------------------------------

int PadicNumber::valuation() const {
  if (zero_) throw DomainError("valuation of exact zero");
  return valuation_;
}

Norm PadicNumber::norm() const { return zero_ ? Norm::zero() : Norm::power(-valuation_); }

int PadicNumber::absolute_precision() const {
  if (is_exact()) return kInfinite;
  return valuation_ + precision_;
}

std::vector<int> PadicNumber::digits() const {
  std::vector<int> out;
  if (zero_) return out;
  out.reserve(static_cast<std::size_t>(precision_));
  mpz_class rest = unit_;
  for (int i = 0; i < precision_; ++i) {
    mpz_class d;
    mpz_fdiv_qr_ui(rest.get_mpz_t(), d.get_mpz_t(), rest.get_mpz_t(), as_ulong(prime_.value()));
    out.push_back(static_cast<int>(d.get_si()));
  }
  return out;
}

int PadicNumber::leading_digit() const {
  if (zero_) throw DomainError("zero has no leading digit");
  return static_cast<int>(mpz_fdiv_ui(unit_.get_mpz_t(), as_ulong(prime_.value())));
}

mpz_class PadicNumber::exact_unit(int digits) const {
  mpz_class num = exact_->get_num();
  mpz_class den = exact_->get_den();
  strip_p(num, prime_.value());
  strip_p(den, prime_.value());
  const mpz_class& modulus = prime_.power(digits);
  return mod_power(num * invert_mod(den, modulus), modulus);
}

mpz_class PadicNumber::unit_to(int digits) const {
  if (digits <= 0) return 0;
  if (exact_ && digits > precision_) return exact_unit(digits);
  if (digits > precision_) {
    throw PrecisionError("requested more digits than are known");
  }
  return mod_power(unit_, prime_.power(digits));
}

// ---------------------------------------------------------------------------

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  PadicNumber r = *this;
  r.unit_ = mod_power(-unit_, prime_.power(precision_));
  if (exact_) r.exact_ = -*exact_;
  return r;
}

std::optional<PadicNumber> PadicNumber::try_add(const PadicNumber& x, const PadicNumber& y) {
  if (!(x.prime_ == y.prime_)) throw DomainError("operands belong to different primes");
  if (x.zero_) return y;
  if (y.zero_) return x;
  if (x.exact_ && y.exact_) {
    return make_exact(*x.exact_ + *y.exact_, x.prime_, std::max(x.precision_, y.precision_));
  }
  const int abs = std::min(x.absolute_precision(), y.absolute_precision());
  const int vmin = std::min(x.valuation_, y.valuation_);
  const int width = abs - vmin;  // >= 1: the operand with the smaller abs precision has v < abs
  const mpz_class& modulus = x.prime_.power(width);

  auto aligned = [&](const PadicNumber& z) -> mpz_class {
    const int shift = z.valuation_ - vmin;
    if (shift >= width) return 0;
    return z.unit_to(width - shift) * x.prime_.power(shift);
  };
  mpz_class sum = mod_power(aligned(x) + aligned(y), modulus);
  if (sum == 0) return std::nullopt;
  int vs = strip_p(sum, x.prime_.value());
  return from_unit(x.prime_, vmin + vs, sum, width - vs);
}

PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) {
  auto r = PadicNumber::try_add(x, y);
  if (!r) {
    throw PrecisionError("sum cancels below the tracked precision (p^" +
                         std::to_string(std::min(x.absolute_precision(), y.absolute_precision())) + ")");
  }
  return *std::move(r);
}

PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return x + (-y); }

PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) {
  if (!(x.prime_ == y.prime_)) throw DomainError("operands belong to different primes");
  if (x.zero_ || y.zero_) return PadicNumber::zero(x.prime_);
  if (x.exact_ && y.exact_) {
    return PadicNumber::make_exact(*x.exact_ * *y.exact_, x.prime_, std::max(x.precision_, y.precision_));
  }
  int digits = kInfinite;
  if (!x.exact_) digits = std::min(digits, x.precision_);
  if (!y.exact_) digits = std::min(digits, y.precision_);
  PadicNumber r(x.prime_);
  r.valuation_ = x.valuation_ + y.valuation_;
  r.precision_ = digits;
  r.unit_ = mod_power(x.unit_to(digits) * y.unit_to(digits), x.prime_.power(digits));
  return r;
}

PadicNumber PadicNumber::inverse() const {
  if (zero_) throw DomainError("division by exact zero");
  if (exact_) return make_exact(1 / *exact_, prime_, precision_);
  PadicNumber r(prime_);
  r.valuation_ = -valuation_;
  r.precision_ = precision_;
  r.unit_ = invert_mod(unit_, prime_.power(precision_));
  return r;
}

PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) { return x * y.inverse(); }

PadicNumber PadicNumber::pow(long exponent) const {
  if (exponent == 0) return make_exact(mpq_class(1), prime_, std::max(precision_, 1));
  if (exponent < 0) return inverse().pow(-exponent);
  PadicNumber base = *this;
  std::optional<PadicNumber> acc;
  while (exponent > 0) {
    if (exponent & 1) acc = acc ? *acc * base : base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return *acc;
}

PadicNumber PadicNumber::shifted(int k) const {
  if (zero_) return *this;
  PadicNumber r = *this;
  r.valuation_ += k;
  if (exact_) {
    mpq_class scale = 1;
    mpz_class pk = prime_.power(std::abs(k));
    if (k >= 0) {
      scale = mpq_class(pk);
    } else {
      scale = mpq_class(mpz_class(1), pk);
    }
    mpq_class v = *exact_ * scale;
    v.canonicalize();
    r.exact_ = v;
  }
  return r;
}

PadicNumber PadicNumber::truncated(int abs_precision) const {
  if (zero_) {
    throw PrecisionError("exact zero has no truncated representative");
  }
  int digits = abs_precision - valuation_;
  if (!exact_) digits = std::min(digits, precision_);
  if (digits < 1) {
    throw PrecisionError("value vanishes modulo p^" + std::to_string(abs_precision));
  }
  return from_unit(prime_, valuation_, unit_to(digits), digits);
}

mpz_class PadicNumber::residue(int k) const {
  if (k <= 0) return 0;
  if (zero_) return 0;
  if (valuation_ < 0) throw DomainError("residue of a non-integral value");
  if (valuation_ >= k) {
    if (!is_exact() && absolute_precision() < k) {
      throw PrecisionError("value known only modulo p^" + std::to_string(absolute_precision()));
    }
    return 0;
  }
  return mod_power(unit_to(k - valuation_) * prime_.power(valuation_), prime_.power(k));
}

// ---------------------------------------------------------------------------

Agreement agreement(const PadicNumber& x, const PadicNumber& y) {
  if (x.is_exact() && y.is_exact()) {
    if (*x.exact_value() == *y.exact_value()) return {INT_MAX, false, true};
    PadicNumber d = x - y;
    return {d.valuation(), false, false};
  }
  auto d = PadicNumber::try_add(x, -y);
  if (!d) {
    return {std::min(x.absolute_precision(), y.absolute_precision()), true, false};
  }
  return {d->valuation(), false, false};
}

// ---------------------------------------------------------------------------

PadicNumber exp_p(const PadicNumber& x, const PrecisionContext& ctx) {
  const Prime& prime = x.prime();
  if (x.is_zero()) return PadicNumber::one(prime, ctx);
  const int v = x.valuation();
  if (v < 1) throw DomainError("exp_p converges only for |x|_p <= 1/p");
  const int target = ctx.default_digits;
  const std::int64_t p = prime.value();

  const PadicNumber xt = x.is_exact() ? x.truncated(v + target) : x;
  PadicNumber sum = PadicNumber::one(prime, ctx);
  PadicNumber term = PadicNumber::one(prime, ctx);
  for (long n = 1;; ++n) {
    // ord(x^m / m!) >= m v - (m - 1)/(p - 1), increasing in m once v >= 1
    if (n * v - (n - 1) / (p - 1) >= target) break;
    term = term * xt / PadicNumber::from_integer(n, prime, ctx);
    sum = sum + term;
  }
  return sum.truncated(target);
}

PadicNumber log_p(const PadicNumber& x, const PrecisionContext& ctx) {
  const Prime& prime = x.prime();
  if (x.is_zero()) throw DomainError("log_p converges only for |x - 1|_p < 1");
  const PadicNumber one = PadicNumber::one(prime, ctx);
  if (x.valuation() != 0 || x.leading_digit() != 1) {
    throw DomainError("log_p converges only for |x - 1|_p < 1");
  }
  if (x.is_exact() && *x.exact_value() == 1) return PadicNumber::zero(prime);
  auto diff = PadicNumber::try_add(x, -one);
  if (!diff) throw PrecisionError("x - 1 vanishes at the tracked precision");
  const PadicNumber y = diff->is_exact() ? diff->truncated(diff->valuation() + ctx.default_digits) : *diff;
  const int v = y.valuation();
  const int target = ctx.default_digits;
  const std::int64_t p = prime.value();

  auto ceil_log_p = [p](long n) {
    int e = 0;
    for (long q = 1; q < n; q *= p) ++e;
    return e;
  };

  std::optional<PadicNumber> sum;
  PadicNumber power = y;
  for (long n = 1;; ++n) {
    if (n * v - ceil_log_p(n) >= target) break;
    PadicNumber term = power / PadicNumber::from_integer(n, prime, ctx);
    if (n % 2 == 0) term = -term;
    sum = sum ? *sum + term : term;
    power = power * y;
  }
  return sum->truncated(target);
}

std::optional<std::pair<PadicNumber, PadicNumber>> sqrt_unit(const PadicNumber& a) {
  if (a.is_zero() || a.valuation() != 0) {
    throw DomainError("sqrt_unit requires |a|_p = 1");
  }
  const Prime& prime = a.prime();
  const std::int64_t p = prime.value();
  auto root0 = modp::sqrt(a.leading_digit(), p);
  if (!root0) return std::nullopt;

  const int digits = a.precision();
  const mpz_class& modulus = prime.power(digits);
  const mpz_class target = a.unit();
  mpz_class x = *root0;
  for (int known = 1; known < digits; known *= 2) {
    // Newton step for x^2 - a
    mpz_class fx = mod_power(x * x - target, modulus);
    mpz_class step = mod_power(fx * invert_mod(2 * x, modulus), modulus);
    x = mod_power(x - step, modulus);
  }
  if (mod_power(x * x - target, modulus) != 0) {
    throw InvariantViolation("square root lift did not converge");
  }
  PadicNumber r = PadicNumber::from_unit(prime, 0, x, digits);
  return std::make_pair(r, -r);
}

bool is_in_Ep(const PadicNumber& x) {
  // For p > 3 the open ball of radius p^(-1/(p-1)) around 1 meets Q_p in 1 + pZ_p.
  return !x.is_zero() && x.valuation() == 0 && x.leading_digit() == 1;
}

}  // namespace padic

#pragma once

// Randomized property checks for the p-adic core, shared by the unit tests
// and the acceptance runner.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "padic/errors.hpp"
#include "padic/literal.hpp"
#include "padic/padic_number.hpp"
#include "test_support.hpp"

namespace padic_properties {

using padic::PadicNumber;
using padic::Prime;

struct PropertyResult {
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline const std::vector<std::int64_t>& property_primes() {
  static const std::vector<std::int64_t> primes = {5, 7, 11, 13, 101};
  return primes;
}

// An exact value, or the same value truncated to a random relative precision.
inline PadicNumber sample(std::mt19937_64& rng, const Prime& prime, int min_shift, int max_shift) {
  mpq_class q = testing_support::random_rational(rng, prime.value(), min_shift, max_shift);
  PadicNumber x = PadicNumber::from_rational(q, prime);
  if (rng() % 2 == 0) return x;
  const int digits = 4 + static_cast<int>(rng() % 28);
  return x.truncated(x.valuation() + digits);
}

inline PropertyResult ultrametric_law(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  const auto& primes = property_primes();
  while (r.cases < cases) {
    Prime prime(primes[rng() % primes.size()]);
    PadicNumber x = sample(rng, prime, -4, 6);
    PadicNumber y = sample(rng, prime, -4, 6);
    if (rng() % 4 == 0) y = -x + sample(rng, prime, 2, 8).truncated(60);  // force near-cancellation
    auto s = PadicNumber::try_add(x, y);
    ++r.cases;
    if (!s) continue;  // cancelled below tracked precision: no norm to compare
    if (s->is_zero()) continue;
    const int vx = x.valuation();
    const int vy = y.valuation();
    const int vs = s->valuation();
    if (vs < std::min(vx, vy)) {
      r.fail("|x+y| exceeds max(|x|,|y|) for x=" + padic::format_literal(x) + " y=" + padic::format_literal(y));
    } else if (vx != vy && vs != std::min(vx, vy)) {
      r.fail("|x+y| != max(|x|,|y|) for unequal norms, x=" + padic::format_literal(x));
    }
    if (x.is_exact() && y.is_exact() && *x.exact_value() + *y.exact_value() != 0) {
      mpq_class sum = *x.exact_value() + *y.exact_value();
      if (testing_support::rational_valuation(sum, prime.value()) != vs) r.fail("exact sum valuation mismatch");
    }
  }
  return r;
}

inline PropertyResult norm_multiplicativity(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  const auto& primes = property_primes();
  while (r.cases < cases) {
    Prime prime(primes[rng() % primes.size()]);
    PadicNumber x = sample(rng, prime, -6, 6);
    PadicNumber y = sample(rng, prime, -6, 6);
    ++r.cases;
    PadicNumber xy = x * y;
    if (xy.norm().exponent() != x.norm().exponent() + y.norm().exponent()) {
      r.fail("|xy| != |x||y| for x=" + padic::format_literal(x) + " y=" + padic::format_literal(y));
    }
    PadicNumber q = x / y;
    if (q.norm().exponent() != x.norm().exponent() - y.norm().exponent()) r.fail("|x/y| != |x|/|y|");
  }
  return r;
}

// |prod a_i - prod b_i| <= max |a_i - b_i| for a_i, b_i in the unit ball.
inline PropertyResult product_bound(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  const auto& primes = property_primes();
  while (r.cases < cases) {
    Prime prime(primes[rng() % primes.size()]);
    const std::int64_t p = prime.value();
    const int len = 1 + static_cast<int>(rng() % 6);
    mpq_class pa = 1;
    mpq_class pb = 1;
    int max_gap_val = INT32_MAX;  // min valuation of a_i - b_i
    bool equal_all = true;
    for (int i = 0; i < len; ++i) {
      mpq_class a = testing_support::random_rational(rng, p, 0, 3);
      while (testing_support::rational_valuation(a, p) < 0) a *= p;
      mpq_class d = testing_support::random_rational(rng, p, 0, 5);
      while (testing_support::rational_valuation(d, p) < 0) d *= p;
      if (rng() % 8 == 0) d = 0;
      mpq_class b = a + d;
      if (testing_support::rational_valuation(b == 0 ? mpq_class(1) : b, p) < 0) b = a;
      pa *= a;
      pb *= b;
      if (a != b) {
        equal_all = false;
        max_gap_val = std::min(max_gap_val, testing_support::rational_valuation(a - b, p));
      }
    }
    ++r.cases;
    PadicNumber diff = PadicNumber::from_rational(pa, prime) - PadicNumber::from_rational(pb, prime);
    if (equal_all) {
      if (!diff.is_zero()) r.fail("identical tuples gave different products");
      continue;
    }
    if (!diff.is_zero() && diff.valuation() < max_gap_val) {
      std::ostringstream os;
      os << "product gap valuation " << diff.valuation() << " below " << max_gap_val << " (p=" << p << ")";
      r.fail(os.str());
    }
  }
  return r;
}

// log(exp(x)) = x and exp(log(1+x)) = 1+x at the tracked precision.
inline PropertyResult exp_log_round_trip(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  const auto& primes = property_primes();
  const padic::PrecisionContext ctx = padic::PrecisionContext::with_digits(24);
  const int target = ctx.default_digits;
  while (r.cases < cases) {
    Prime prime(primes[rng() % primes.size()]);
    const int v = 1 + static_cast<int>(rng() % 4);
    PadicNumber x = rng() % 2 == 0
                        ? testing_support::random_unit(rng, prime, 40).shifted(v)
                        : PadicNumber::from_rational(testing_support::random_rational(rng, prime.value(), v, v), prime);
    if (x.valuation() < 1) continue;
    ++r.cases;
    PadicNumber e = padic::exp_p(x, ctx);
    if (!padic::is_in_Ep(e) || (e - PadicNumber::one(prime)).valuation() != x.valuation()) {
      r.fail("|exp(x) - 1| != |x| for x=" + padic::format_literal(x));
      continue;
    }
    PadicNumber back = padic::log_p(e, ctx);
    auto ag = padic::agreement(back, x);
    if (!ag.indistinguishable() && ag.digits < target) {
      r.fail("log(exp(x)) differs from x at digit " + std::to_string(ag.digits) + ", x=" + padic::format_literal(x));
      continue;
    }
    PadicNumber one_plus = PadicNumber::one(prime) + x;
    PadicNumber l = padic::log_p(one_plus, ctx);
    if (l.valuation() != x.valuation()) r.fail("|log(1+x)| != |x|");
    PadicNumber again = padic::exp_p(l, ctx);
    auto ag2 = padic::agreement(again, one_plus);
    if (!ag2.indistinguishable() && ag2.digits < target) r.fail("exp(log(1+x)) differs from 1+x");
  }
  return r;
}

// Rendering to the literal format and parsing back reproduces the value mod p^N.
inline PropertyResult literal_round_trip(std::uint64_t seed, long cases) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  const auto& primes = property_primes();
  while (r.cases < cases) {
    Prime prime(primes[rng() % primes.size()]);
    PadicNumber x = sample(rng, prime, -5, 5);
    ++r.cases;
    PadicNumber y = padic::parse_literal(padic::format_literal(x), prime);
    auto ag = padic::agreement(x, y);
    if (x.is_exact() != y.is_exact()) {
      r.fail("exactness lost in round trip of " + padic::format_literal(x));
    } else if (x.is_exact() ? !ag.exact : (!ag.indistinguishable() || y.absolute_precision() != x.absolute_precision())) {
      r.fail("round trip changed " + padic::format_literal(x));
    }
  }
  return r;
}

}  // namespace padic_properties

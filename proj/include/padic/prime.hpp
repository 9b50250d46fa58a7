#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

namespace padic {

/// An odd prime p > 3, with a shared table of its powers.
///
/// Copies share the power table, so passing a Prime by value is cheap.
class Prime {
 public:
  static constexpr int kMaxPower = 512;

  /// Throws DomainError unless `p` is prime and greater than 3.
  explicit Prime(std::int64_t p);

  std::int64_t value() const { return p_; }

  /// p^k for 0 <= k <= kMaxPower; ResourceError beyond.
  const mpz_class& power(int k) const;

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

 private:
  std::int64_t p_;
  std::shared_ptr<const std::vector<mpz_class>> powers_;
};

bool is_prime(std::int64_t n);

}  // namespace padic

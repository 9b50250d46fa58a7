#include "padic/prime.hpp"

#include <string>

#include "padic/errors.hpp"

namespace padic {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
  if (p <= 3) {
    throw DomainError("only primes p > 3 are supported, got " + std::to_string(p));
  }
  auto table = std::make_shared<std::vector<mpz_class>>();
  table->reserve(kMaxPower + 1);
  mpz_class acc = 1;
  for (int k = 0; k <= kMaxPower; ++k) {
    table->push_back(acc);
    acc *= static_cast<unsigned long>(p);
  }
  powers_ = std::move(table);
}

const mpz_class& Prime::power(int k) const {
  if (k < 0) {
    throw DomainError("negative power of p requested");
  }
  if (k > kMaxPower) {
    throw ResourceError("p^" + std::to_string(k) + " exceeds the supported precision");
  }
  return (*powers_)[static_cast<std::size_t>(k)];
}

}  // namespace padic

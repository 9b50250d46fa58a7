#include "padic/modular.hpp"

#include "padic/errors.hpp"

namespace padic::modp {

std::int64_t reduce(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(reduce(a, p)) * reduce(b, p) % p);
}

std::int64_t pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t base = reduce(a, p);
  std::int64_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  if (a == 0) throw DomainError("zero has no inverse mod p");
  return pow(a, p - 2, p);
}

bool is_square(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  if (a == 0) throw DomainError("Euler criterion needs a unit");
  return pow(a, (p - 1) / 2, p) == 1;
}

std::optional<std::int64_t> sqrt(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  if (a == 0) return 0;
  if (!is_square(a, p)) return std::nullopt;

  // p - 1 = s * 2^e with s odd
  std::int64_t s = p - 1;
  int e = 0;
  while (s % 2 == 0) {
    s /= 2;
    ++e;
  }
  std::int64_t n = 2;
  while (is_square(n, p)) ++n;

  std::int64_t x = pow(a, (s + 1) / 2, p);
  std::int64_t b = pow(a, s, p);
  std::int64_t g = pow(n, s, p);
  int r = e;
  while (b != 1) {
    int m = 0;
    for (std::int64_t t = b; t != 1; t = mul(t, t, p)) ++m;
    std::int64_t gs = g;
    for (int i = 0; i < r - m - 1; ++i) gs = mul(gs, gs, p);
    x = mul(x, gs, p);
    g = mul(gs, gs, p);
    b = mul(b, g, p);
    r = m;
  }
  return x <= p / 2 ? x : p - x;
}

}  // namespace padic::modp

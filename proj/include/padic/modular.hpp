#pragma once

#include <cstdint>
#include <optional>

// Arithmetic in F_p for word-sized p.
namespace padic::modp {

/// Canonical representative of a in [0, p).
std::int64_t reduce(std::int64_t a, std::int64_t p);

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t pow(std::int64_t a, std::int64_t e, std::int64_t p);

/// Inverse of a unit; DomainError when a == 0 mod p.
std::int64_t inverse(std::int64_t a, std::int64_t p);

/// Euler criterion: a^((p-1)/2) == 1.  a must be nonzero mod p.
bool is_square(std::int64_t a, std::int64_t p);

/// Tonelli-Shanks.  Returns the root in [0, p/2], or nullopt for non-residues.
std::optional<std::int64_t> sqrt(std::int64_t a, std::int64_t p);

}  // namespace padic::modp

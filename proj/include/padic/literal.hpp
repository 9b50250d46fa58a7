#pragma once

#include <string>
#include <string_view>

#include "padic/padic_number.hpp"

namespace padic {

/// Parses either a rational literal (`-13`, `25/3`) or a digit expansion
///
///     p^v * (d0 + d1*p + d2*p^2 + ...)
///
/// where `p` may be written literally or as the numeric prime, the `p^v *`
/// prefix is optional, and a trailing `...` marks a truncated value whose
/// precision is the number of digit positions written.  Without `...` the
/// expansion is a finite, exact value.  Throws ParseError.
PadicNumber parse_literal(std::string_view text, const Prime& prime, const PrecisionContext& ctx = {});

/// Exact values print as `num/den`; truncated values print in digit form
/// with the numeric prime, ending in `...`.
std::string format_literal(const PadicNumber& x);

}  // namespace padic

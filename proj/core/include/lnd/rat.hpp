#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lnd {

/// Exact rational scalar. GMP keeps the canonical form the rest of the
/// library relies on: denominator > 0, gcd(|num|, den) = 1, zero = 0/1.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p", "p/q". Throws lnd::ParseError on malformed input or
/// zero denominator.
Rat rat_from_string(std::string_view text);

/// Canonical "p" / "p/q" rendering (denominator omitted when 1).
std::string rat_to_string(const Rat& value);

bool rat_is_integer(const Rat& value);

}  // namespace lnd

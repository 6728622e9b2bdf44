#pragma once

#include <string_view>

#include "lnd/poly.hpp"

namespace lnd {

/// Parses the ASCII polynomial grammar
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | var | var '^' nat | '(' expr ')' | '-' factor
///   rational := nat | nat '/' nat
/// Explicit '*' is required; whitespace is insignificant. The result is in
/// canonical form (normal form when the ring has a relation).
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace lnd

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/expmap.hpp"
#include "lnd/poly.hpp"

namespace lnd {

/// Parsed session file: the ambient ring plus named derivations,
/// automorphisms and polynomials. Names share one namespace and are unique.
struct SessionFile {
  RingPtr ring;
  std::vector<std::pair<std::string, Derivation>> derivations;
  std::vector<std::pair<std::string, PolyAuto>> autos;
  std::vector<std::pair<std::string, Poly>> polys;
  std::string digest;  // fnv1a-64 of the source text, hex

  const Derivation* find_derivation(const std::string& name) const;
  const PolyAuto* find_auto(const std::string& name) const;
  const Poly* find_poly(const std::string& name) const;
};

/// Session grammar (UTF-8 text, '#' comments):
///   ring Q[v1,...,vn]
///   order grlex | lex | grevlex      (optional, before `relation`)
///   relation <expr>                  (optional, at most one)
///   derivation NAME { VAR -> expr ; ... }   (unlisted variables -> 0)
///   auto NAME { VAR -> expr ; ... }         (unlisted variables -> themselves)
///   poly NAME = expr
SessionFile parse_session(std::string_view text);

SessionFile load_session(const std::string& path);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace lnd

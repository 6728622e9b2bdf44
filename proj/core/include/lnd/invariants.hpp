#pragma once

#include <optional>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/poly.hpp"

namespace lnd {

/// All normal-form monomials of total degree <= bound (for quotient rings:
/// the monomials not divisible by the relation's leading term), descending
/// in the ring order.
std::vector<Mono> monomials_up_to(const RingPtr& ring, unsigned bound);

/// Basis of {g : deg g <= degree_bound, D_i(g) = 0 for all i} as a
/// Q-vector space: exact nullspace, echelonized with pivot-monomial
/// normalization, presented ascending in the ring order.
struct InvariantBasis {
  unsigned degree_bound;
  std::vector<Poly> basis;
};

InvariantBasis invariant_space(const std::vector<Derivation>& ds,
                               unsigned degree_bound);

/// The generator f with the invariants equal to k[f] up to the bound:
/// minimal-degree nonconstant invariant, constant term dropped, monic in
/// the leading term, ties broken by monomial order. Throws
/// InconclusiveError when no nonconstant invariant exists up to the bound
/// or when some invariant is not a polynomial in f up to the bound.
Poly kernel_generator(const std::vector<Derivation>& ds,
                      unsigned degree_bound);

/// Ring of abstract indeterminates used by express_in_subalgebra: "t" for
/// one generator, "t1".."tm" otherwise; pure lex order (t1 >> t2 >> ...).
RingPtr subalgebra_ring(std::size_t generator_count);

/// Writes g as a polynomial expression in the given subalgebra generators
/// (expression total degree <= degree_bound), by exact linear solve.
/// The result lives in subalgebra_ring(gens.size()); nullopt when g is not
/// in the truncated subalgebra.
std::optional<Poly> express_in_subalgebra(const Poly& g,
                                          const std::vector<Poly>& gens,
                                          unsigned degree_bound);

/// Substitutes the generators back into an abstract expression; inverse of
/// express_in_subalgebra up to normal form.
Poly evaluate_expression(const Poly& expression,
                         const std::vector<Poly>& gens);

}  // namespace lnd

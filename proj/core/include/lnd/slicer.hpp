#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/poly.hpp"
#include "lnd/unipoly.hpp"

namespace lnd {

/// Bracket convention used throughout (stated in every report).
inline constexpr const char* kBracketConvention =
    "[D,E] = D*E - E*D on generators";

struct TriangularPairCheck {
  std::size_t i, j;  // 1-based pair, i < j
  /// Coefficients of [D_i, D_j] over {D_1, ..., D_{i-1}}, when it lies in
  /// that span.
  std::optional<std::vector<Rat>> span_coefficients;
  /// [D_i, D_j] annihilates the invariant basis of {D_1, ..., D_{i-1}}
  /// up to the degree bound.
  bool restricted_commutes;
};

struct TriangularReport {
  bool pass;
  unsigned degree_bound;
  std::vector<TriangularPairCheck> pairs;
};

TriangularReport triangular_basis_check(const std::vector<Derivation>& ds,
                                        unsigned degree_bound);

/// Preslice of D_i compatible with the basis: D_j(p) = 0 for j < i and
/// D_i(p) = q(f) exactly, q monic. q is the monic gcd of every q attainable
/// at the bound; the true generator divides it, with equality once the
/// bound saturates.
struct PresliceResult {
  std::size_t index;  // 1-based
  Poly p;
  UniPoly q;
  unsigned degree_bound_used;
};

PresliceResult preslice_search(std::size_t index,
                               const std::vector<Derivation>& ds,
                               const Poly& f, unsigned degree_bound);

struct FiberFactor {
  UniPoly factor;  // monic
  unsigned multiplicity;
  /// True when irreducibility over Q is certified (linear factors, and
  /// root-free factors of degree <= 3).
  bool irreducible_certified;
};

struct FiberRationalRoot {
  Rat alpha;
  unsigned multiplicity;
  std::size_t witness_index;  // 1-based i with q_i(alpha) = 0
};

struct FiberReport {
  std::vector<FiberFactor> factors;  // product = prod q_i up to a constant
  std::vector<FiberRationalRoot> rational_roots;
};

FiberReport degenerate_fibers(const std::vector<UniPoly>& qs);

/// The fiber ring A/(f - alpha) together with the induced derivations.
struct FiberModel {
  RingPtr ring;
  std::vector<Derivation> induced;
  /// Variable eliminated from a hypersurface fiber whose substituted
  /// relation was linear with a constant coefficient, with its value.
  std::optional<std::string> eliminated_variable;
  std::optional<Poly> eliminated_value;
};

/// Builds A/(f - alpha). Supported: f a ring variable (dropped by
/// substitution; hypersurface relations are substituted and, when
/// `eliminate_linear` is set and the result is linear with a constant
/// coefficient in some variable, that variable is eliminated too), or a
/// free ring with arbitrary nonconstant f (hypersurface fiber ring).
FiberModel build_fiber_model(const std::vector<Derivation>& ds, const Poly& f,
                             const Rat& alpha, bool eliminate_linear);

/// Direct Lemma-style dependence test: true iff there are residues g_i of
/// degree <= bound, not all zero, with sum g_i D_i = 0 on every generator
/// of A/(f - alpha). Independent of the q_i route.
bool fiber_dependence_check(const std::vector<Derivation>& ds, const Poly& f,
                            const Rat& alpha, unsigned degree_bound);

/// Proposition-1 descent: repeatedly replaces p by D_j(p) for the smallest
/// j >= 2 with dq/ds_j != 0 until q = D_1(p) is a nonzero constant, then
/// normalizes so that D_1(p) = 1. ds[0] is the derivation being sliced;
/// ds[k] matches slice_gens[k-1]. Each replacement is appended to *trace.
Poly slice_descent(const Poly& p, const std::vector<Derivation>& ds,
                   const std::vector<Poly>& slice_gens, unsigned degree_bound,
                   std::vector<Poly>* trace = nullptr);

/// Full rectification A ~ Q[s_1,...,s_n]: recursively rectifies the tail of
/// the basis on the invariant subalgebra, then slices the head via
/// preslice + descent. The result satisfies D_i(s_i) = 1 and D_i(s_j) = 0
/// for j > i (verified), with a constant nonzero Jacobian on free rings.
std::vector<Poly> rectify_full(const std::vector<Derivation>& ds,
                               unsigned degree_bound);

}  // namespace lnd

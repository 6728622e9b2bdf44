#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/expmap.hpp"
#include "lnd/slicer.hpp"

namespace lnd {

/// A = Q[s_1,...,s_n,f]: slices with D_j(s_i) = 0 for j < i, D_i(s_i) = 1,
/// D_i(f) = 0 for every i, and (on free rings) a constant nonzero Jacobian
/// of (s_1,...,s_n,f).
struct CoordinateCertificate {
  Poly f;
  std::vector<Poly> slices;
  /// Present (and nonzero) on free rings; hypersurface rings have no
  /// Jacobian criterion and rely on the slice equations alone.
  std::optional<Rat> jacobian;
  unsigned bounds_used;
  std::vector<std::string> assumed_hypotheses;
};

/// Outcome of the coordinate pipeline: either a certificate (every q_i is
/// constant) or the degenerate-fiber report.
struct CertifyOutcome {
  Poly f;
  std::vector<PresliceResult> preslices;
  std::optional<CoordinateCertificate> certificate;
  std::optional<FiberReport> fibers;
};

CertifyOutcome certify_coordinate(const std::vector<Derivation>& ds,
                                  unsigned degree_bound);

/// Re-derives every certificate equation from scratch (independent of the
/// search path): slice pattern, invariance of f, and the Jacobian.
bool verify_certificate(const std::vector<Derivation>& ds,
                        const CoordinateCertificate& cert);

/// A/(f - alpha) rectified by Proposition 1.
struct FiberRectification {
  Rat alpha;
  RingPtr fiber_ring;
  std::vector<Derivation> induced;
  std::vector<Poly> coordinates;
  std::optional<std::string> eliminated_variable;
  std::optional<Poly> eliminated_value;
};

/// Requires f to be a distinguished ring variable (quotienting by
/// (P, f - alpha) for general f needs multi-generator ideal machinery,
/// out of scope). Throws DomainError at degenerate fibers.
FiberRectification fiber_rectify(const std::vector<Derivation>& ds,
                                 const Poly& f, const Rat& alpha,
                                 unsigned degree_bound);

/// The partial derivatives with respect to the components of F: returns
/// D_1,...,D_n with D_i(F_j) = delta_ij and [D_i, D_j] = 0 (both verified),
/// built from the exact inverse Jacobian (adjugate over a constant
/// determinant). Requires a free ring and jacobian_det(F) in Q*.
std::vector<Derivation> mates_to_derivations(const PolyAuto& f_map);

}  // namespace lnd

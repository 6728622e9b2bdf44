#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/poly.hpp"

namespace lnd {

/// Composition convention used throughout: compose(u, v)(x) substitutes v's
/// images into u(x); as ring endomorphisms the result is g -> v(u(g)).
inline constexpr const char* kComposeConvention =
    "compose(u,v): substitute v into u; as ring endomorphisms g -> v(u(g))";

/// Polynomial ring endomorphism given by generator images (u* acting on the
/// coordinate ring). On quotient rings the images must map the relation
/// into its ideal (checked at construction).
class PolyAuto {
public:
  static PolyAuto identity(const RingPtr& ring);
  static PolyAuto from_images(RingPtr ring, std::vector<Poly> images);
  /// Unlisted variables map to themselves.
  static PolyAuto from_named_images(const RingPtr& ring,
                                    const std::map<std::string, Poly>& images);

  const RingPtr& ring() const { return ring_; }
  const Poly& image(std::size_t var) const { return images_[var]; }
  const std::vector<Poly>& images() const { return images_; }

  /// Marks the map as a certified automorphism: requires a free ring and a
  /// nonzero constant Jacobian determinant (throws DomainError otherwise).
  PolyAuto with_certification() const;
  bool certified_automorphism() const { return certified_; }
  /// The Jacobian determinant when it is a nonzero constant (free rings).
  std::optional<Rat> constant_jacobian() const;

  bool operator==(const PolyAuto& other) const;

private:
  PolyAuto(RingPtr ring, std::vector<Poly> images)
      : ring_(std::move(ring)), images_(std::move(images)) {}

  RingPtr ring_;
  std::vector<Poly> images_;
  bool certified_ = false;
};

/// u(g): substitution of the generator images into g, reduced.
Poly apply_auto(const PolyAuto& u, const Poly& g);

/// exp(tD): x -> sum_j t^j D^j(x) / j!, finite by the certificate (which is
/// re-verified).
PolyAuto exp_derivation(const Derivation& d, const Rat& t,
                        const NilpotencyCertificate& cert);

/// ln(u): the alternating series D(g) = sum_{j>=1} (-1)^{j+1} (u-id)^j(g)/j
/// on each generator; DomainError when (u-id)-iterates of some generator do
/// not vanish within max_iter (input not visibly unipotent).
Derivation log_automorphism(const PolyAuto& u, unsigned max_iter);

PolyAuto compose_autos(const PolyAuto& u, const PolyAuto& v);

}  // namespace lnd

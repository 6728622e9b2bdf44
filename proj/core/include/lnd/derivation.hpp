#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/poly.hpp"

namespace lnd {

/// Per-generator exponents m_x with D^{m_x}(x) = 0 and D^{m_x - 1}(x) != 0.
struct NilpotencyCertificate {
  std::vector<unsigned> nil_degree;  // one entry per ring variable
};

/// Q-derivation of the ring, given by generator images and extended by
/// Leibniz. Images are stored in normal form; on a quotient ring the
/// candidate images must map the relation into its own ideal (verified at
/// construction).
class Derivation {
public:
  static Derivation zero(RingPtr ring);
  static Derivation from_images(RingPtr ring, std::vector<Poly> images);
  static Derivation from_named_images(const RingPtr& ring,
                                      const std::map<std::string, Poly>& images);

  const RingPtr& ring() const { return ring_; }
  const Poly& image(std::size_t var) const { return images_[var]; }
  const std::vector<Poly>& images() const { return images_; }
  bool is_zero() const;

  bool operator==(const Derivation& other) const;

private:
  Derivation(RingPtr ring, std::vector<Poly> images)
      : ring_(std::move(ring)), images_(std::move(images)) {}

  RingPtr ring_;
  std::vector<Poly> images_;
};

/// D(g) = sum_x images[x] * dg/dx, reduced to normal form.
Poly apply_derivation(const Derivation& d, const Poly& g);

/// [D, E] = D∘E − E∘D on generators.
Derivation lie_bracket(const Derivation& d, const Derivation& e);

Derivation derivation_scale(const Derivation& d, const Rat& c);
Derivation derivation_add(const Derivation& d, const Derivation& e);

/// Exact linear solve for constants c with e = sum c_j basis_j (matched on
/// every generator image); nullopt when e is outside the span.
std::optional<std::vector<Rat>> k_span_membership(
    const Derivation& e, const std::vector<Derivation>& basis);

/// Bounded semi-decision: a certificate when every generator dies within
/// max_power applications, otherwise nullopt (Unknown) — never a claim of
/// non-nilpotency.
std::optional<NilpotencyCertificate> check_locally_nilpotent(
    const Derivation& d, unsigned max_power);

bool verify_nilpotency_certificate(const Derivation& d,
                                   const NilpotencyCertificate& cert);

/// True iff applying the candidate images (free-ring polynomials) to the
/// ring's relation P yields a multiple of P. Vacuously true on free rings.
bool check_induces_on_quotient(const std::map<std::string, Poly>& images,
                               const RingPtr& ring);

}  // namespace lnd

#include "lnd/expmap.hpp"

#include "lnd/errors.hpp"

namespace lnd {

namespace {

void check_respects_relation(const std::vector<Poly>& images,
                             const RingPtr& ring) {
  if (!ring->has_relation()) return;
  const Poly& relation = ring->relation();
  std::vector<Poly> lifted;
  lifted.reserve(images.size());
  for (const Poly& img : images) lifted.push_back(lift_to_free(img));
  Poly image_of_relation = substitute(relation, lifted);
  if (!divmod_single(image_of_relation, relation).second.is_zero())
    throw DomainError("automorphism",
                      "images do not define an endomorphism of " +
                          ring->description() +
                          ": the relation is not mapped into its ideal");
}

}  // namespace

PolyAuto PolyAuto::identity(const RingPtr& ring) {
  std::vector<Poly> images;
  images.reserve(ring->nvars());
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    images.push_back(Poly::variable(ring, v));
  return PolyAuto(ring, std::move(images));
}

PolyAuto PolyAuto::from_images(RingPtr ring, std::vector<Poly> images) {
  if (images.size() != ring->nvars())
    throw UsageError("automorphism", "one image per ring variable required");
  std::vector<Poly> normalized;
  normalized.reserve(images.size());
  for (Poly& img : images) {
    if (!same_ring(img.ring(), ring))
      throw UsageError("automorphism", "image lives in a different ring");
    normalized.push_back(normal_form(img));
  }
  check_respects_relation(normalized, ring);
  return PolyAuto(std::move(ring), std::move(normalized));
}

PolyAuto PolyAuto::from_named_images(
    const RingPtr& ring, const std::map<std::string, Poly>& images) {
  std::vector<Poly> vec;
  vec.reserve(ring->nvars());
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    vec.push_back(Poly::variable(ring, v));
  for (const auto& [name, poly] : images) {
    auto idx = ring->variable_index(name);
    if (!idx)
      throw UsageError("automorphism", "unknown variable \"" + name + "\"");
    vec[*idx] = poly;
  }
  return from_images(ring, std::move(vec));
}

std::optional<Rat> PolyAuto::constant_jacobian() const {
  if (ring_->has_relation()) return std::nullopt;
  Poly det = jacobian_det(images_);
  if (det.is_zero() || !det.is_constant()) return std::nullopt;
  return det.constant_coefficient();
}

PolyAuto PolyAuto::with_certification() const {
  if (ring_->has_relation())
    throw DomainError("automorphism",
                      "Jacobian certification needs a free ring");
  auto det = constant_jacobian();
  if (!det)
    throw DomainError("automorphism",
                      "Jacobian determinant is not a nonzero constant");
  PolyAuto out = *this;
  out.certified_ = true;
  return out;
}

bool PolyAuto::operator==(const PolyAuto& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  return images_ == other.images_;
}

Poly apply_auto(const PolyAuto& u, const Poly& g) {
  if (!same_ring(u.ring(), g.ring()))
    throw UsageError("automorphism", "apply: ring mismatch");
  if (!u.ring()->has_relation()) return substitute(g, u.images());
  std::vector<Poly> lifted;
  lifted.reserve(u.images().size());
  for (const Poly& img : u.images()) lifted.push_back(lift_to_free(img));
  Poly out = substitute(lift_to_free(g), lifted);
  return project_to_quotient(out, u.ring());
}

PolyAuto exp_derivation(const Derivation& d, const Rat& t,
                        const NilpotencyCertificate& cert) {
  if (!verify_nilpotency_certificate(d, cert))
    throw DomainError("exp", "nilpotency certificate failed re-verification");
  std::vector<Poly> images;
  images.reserve(d.ring()->nvars());
  for (std::size_t v = 0; v < d.ring()->nvars(); ++v) {
    Poly acc = Poly::variable(d.ring(), v);
    Poly cur = acc;
    Rat factor(1);
    for (unsigned j = 1; j < cert.nil_degree[v]; ++j) {
      cur = apply_derivation(d, cur);
      factor *= t / Rat(j);
      acc += cur * factor;
    }
    images.push_back(std::move(acc));
  }
  return PolyAuto::from_images(d.ring(), std::move(images));
}

Derivation log_automorphism(const PolyAuto& u, unsigned max_iter) {
  std::vector<Poly> images;
  images.reserve(u.ring()->nvars());
  for (std::size_t v = 0; v < u.ring()->nvars(); ++v) {
    Poly delta = u.image(v) - Poly::variable(u.ring(), v);
    Poly acc(u.ring());
    unsigned j = 1;
    while (!delta.is_zero()) {
      if (j > max_iter)
        throw DomainError(
            "log", "series did not terminate within " +
                       std::to_string(max_iter) + " iterations on variable " +
                       u.ring()->variable_name(v) +
                       " (input not visibly unipotent)");
      Poly signed_term = delta / Rat(j);
      if (j % 2 == 0) signed_term = -signed_term;
      acc += signed_term;
      delta = apply_auto(u, delta) - delta;
      ++j;
    }
    images.push_back(std::move(acc));
  }
  return Derivation::from_images(u.ring(), std::move(images));
}

PolyAuto compose_autos(const PolyAuto& u, const PolyAuto& v) {
  if (!same_ring(u.ring(), v.ring()))
    throw UsageError("automorphism", "compose: ring mismatch");
  std::vector<Poly> images;
  images.reserve(u.images().size());
  for (const Poly& ux : u.images()) images.push_back(apply_auto(v, ux));
  return PolyAuto::from_images(u.ring(), std::move(images));
}

}  // namespace lnd

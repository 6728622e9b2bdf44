#include "lnd/derivation.hpp"

#include <unordered_map>

#include "lnd/errors.hpp"
#include "lnd/linalg.hpp"

namespace lnd {

namespace {

void require_same_ring(const Derivation& a, const Derivation& b,
                       const char* what) {
  if (!same_ring(a.ring(), b.ring()))
    throw UsageError("derivation", std::string(what) + ": ring mismatch");
}

bool induces_on_quotient(const std::vector<Poly>& free_images,
                         const RingPtr& ring) {
  if (!ring->has_relation()) return true;
  const Poly& relation = ring->relation();
  const RingPtr& free = ring->free_twin();
  Poly dp(free);
  for (std::size_t v = 0; v < free->nvars(); ++v) {
    if (free_images[v].is_zero()) continue;
    dp += free_images[v] * derive_partial(relation, v);
  }
  if (dp.is_zero()) return true;
  return divmod_single(dp, relation).second.is_zero();
}

}  // namespace

Derivation Derivation::zero(RingPtr ring) {
  std::vector<Poly> images(ring->nvars(), Poly(ring));
  return Derivation(std::move(ring), std::move(images));
}

Derivation Derivation::from_images(RingPtr ring, std::vector<Poly> images) {
  if (images.size() != ring->nvars())
    throw UsageError("derivation", "one image per ring variable required");
  std::vector<Poly> normalized;
  normalized.reserve(images.size());
  for (Poly& img : images) {
    if (!same_ring(img.ring(), ring))
      throw UsageError("derivation", "image lives in a different ring");
    normalized.push_back(normal_form(img));
  }
  if (ring->has_relation()) {
    std::vector<Poly> lifted;
    lifted.reserve(normalized.size());
    for (const Poly& img : normalized) lifted.push_back(lift_to_free(img));
    if (!induces_on_quotient(lifted, ring))
      throw DomainError("derivation",
                        "images do not induce a derivation on " +
                            ring->description() +
                            ": D(P) is not a multiple of P");
  }
  return Derivation(std::move(ring), std::move(normalized));
}

Derivation Derivation::from_named_images(
    const RingPtr& ring, const std::map<std::string, Poly>& images) {
  std::vector<Poly> vec(ring->nvars(), Poly(ring));
  for (const auto& [name, poly] : images) {
    auto idx = ring->variable_index(name);
    if (!idx)
      throw UsageError("derivation", "unknown variable \"" + name + "\"");
    vec[*idx] = poly;
  }
  return from_images(ring, std::move(vec));
}

bool Derivation::is_zero() const {
  for (const Poly& img : images_)
    if (!img.is_zero()) return false;
  return true;
}

bool Derivation::operator==(const Derivation& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  return images_ == other.images_;
}

Poly apply_derivation(const Derivation& d, const Poly& g) {
  if (!same_ring(d.ring(), g.ring()))
    throw UsageError("derivation", "apply: ring mismatch");
  const RingPtr free = d.ring()->free_twin();
  Poly acc(free);
  Poly rep = lift_to_free(g);
  for (std::size_t v = 0; v < free->nvars(); ++v) {
    if (d.image(v).is_zero()) continue;
    Poly partial = derive_partial(rep, v);
    if (partial.is_zero()) continue;
    acc += lift_to_free(d.image(v)) * partial;
  }
  if (!d.ring()->has_relation()) return acc;
  return project_to_quotient(acc, d.ring());
}

Derivation lie_bracket(const Derivation& d, const Derivation& e) {
  require_same_ring(d, e, "bracket");
  std::vector<Poly> images;
  images.reserve(d.ring()->nvars());
  for (std::size_t v = 0; v < d.ring()->nvars(); ++v) {
    Poly x = Poly::variable(d.ring(), v);
    images.push_back(apply_derivation(d, apply_derivation(e, x)) -
                     apply_derivation(e, apply_derivation(d, x)));
  }
  return Derivation::from_images(d.ring(), std::move(images));
}

Derivation derivation_scale(const Derivation& d, const Rat& c) {
  std::vector<Poly> images;
  images.reserve(d.images().size());
  for (const Poly& img : d.images()) images.push_back(img * c);
  return Derivation::from_images(d.ring(), std::move(images));
}

Derivation derivation_add(const Derivation& d, const Derivation& e) {
  require_same_ring(d, e, "add");
  std::vector<Poly> images;
  images.reserve(d.images().size());
  for (std::size_t v = 0; v < d.images().size(); ++v)
    images.push_back(d.image(v) + e.image(v));
  return Derivation::from_images(d.ring(), std::move(images));
}

std::optional<std::vector<Rat>> k_span_membership(
    const Derivation& e, const std::vector<Derivation>& basis) {
  for (const Derivation& b : basis) require_same_ring(e, b, "span");
  if (basis.empty())
    return e.is_zero() ? std::optional<std::vector<Rat>>(std::vector<Rat>{})
                       : std::nullopt;

  // Rows: one per (variable, monomial) pair seen in any image.
  std::size_t nrows = 0;
  std::vector<std::unordered_map<Mono, std::size_t, MonoHash>> rows_per_var(
      e.ring()->nvars());
  auto row_id = [&](std::size_t var, const Mono& m) -> std::size_t {
    auto [it, inserted] = rows_per_var[var].emplace(m, nrows);
    if (inserted) ++nrows;
    return it->second;
  };
  for (std::size_t v = 0; v < e.ring()->nvars(); ++v) {
    for (const Term& t : e.image(v).terms()) row_id(v, t.mono);
    for (const Derivation& b : basis)
      for (const Term& t : b.image(v).terms()) row_id(v, t.mono);
  }

  RatMatrix m(nrows, basis.size());
  std::vector<Rat> rhs(nrows, Rat(0));
  for (std::size_t v = 0; v < e.ring()->nvars(); ++v) {
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const Term& t : basis[j].image(v).terms())
        m.at(row_id(v, t.mono), j) = t.coeff;
    for (const Term& t : e.image(v).terms()) rhs[row_id(v, t.mono)] = t.coeff;
  }

  auto solution = solve(m, rhs);
  if (!solution) return std::nullopt;

  // Verify on every generator image.
  Derivation combo = Derivation::zero(e.ring());
  for (std::size_t j = 0; j < basis.size(); ++j)
    combo = derivation_add(combo, derivation_scale(basis[j], (*solution)[j]));
  if (!(combo == e)) return std::nullopt;
  return solution;
}

std::optional<NilpotencyCertificate> check_locally_nilpotent(
    const Derivation& d, unsigned max_power) {
  if (max_power < 1)
    throw UsageError("nilpotency", "max_power must be at least 1");
  NilpotencyCertificate cert;
  cert.nil_degree.resize(d.ring()->nvars(), 0);
  for (std::size_t v = 0; v < d.ring()->nvars(); ++v) {
    Poly cur = Poly::variable(d.ring(), v);
    unsigned steps = 0;
    while (!cur.is_zero()) {
      if (steps >= max_power) return std::nullopt;
      cur = apply_derivation(d, cur);
      ++steps;
    }
    cert.nil_degree[v] = steps;
  }
  return cert;
}

bool verify_nilpotency_certificate(const Derivation& d,
                                   const NilpotencyCertificate& cert) {
  if (cert.nil_degree.size() != d.ring()->nvars()) return false;
  for (std::size_t v = 0; v < d.ring()->nvars(); ++v) {
    unsigned m = cert.nil_degree[v];
    if (m == 0) return false;
    Poly cur = Poly::variable(d.ring(), v);
    for (unsigned k = 0; k + 1 < m; ++k) cur = apply_derivation(d, cur);
    if (cur.is_zero()) return false;  // D^{m-1}(x) must be nonzero
    cur = apply_derivation(d, cur);
    if (!cur.is_zero()) return false;  // D^{m}(x) must vanish
  }
  return true;
}

bool check_induces_on_quotient(const std::map<std::string, Poly>& images,
                               const RingPtr& ring) {
  if (!ring->has_relation()) return true;
  const RingPtr& free = ring->free_twin();
  std::vector<Poly> vec(free->nvars(), Poly(free));
  for (const auto& [name, poly] : images) {
    auto idx = free->variable_index(name);
    if (!idx)
      throw UsageError("derivation", "unknown variable \"" + name + "\"");
    vec[*idx] = same_ring(poly.ring(), free) ? poly : lift_to_free(poly);
  }
  return induces_on_quotient(vec, ring);
}

}  // namespace lnd

#include "lnd/certify.hpp"

#include "lnd/errors.hpp"
#include "lnd/invariants.hpp"

namespace lnd {

namespace {

const std::vector<std::string> kAssumedHypotheses = {
    "the coordinate ring is factorial (assumed, not verified)",
    "the unit group is Q* (assumed, not verified)",
};

}  // namespace

CertifyOutcome certify_coordinate(const std::vector<Derivation>& ds,
                                  unsigned degree_bound) {
  if (ds.empty())
    throw UsageError("certify", "at least one derivation required");
  const RingPtr& ring = ds[0].ring();
  const std::size_t n = ds.size();

  // n derivations on a ring of Krull dimension n + 1.
  const std::size_t expected_vars = ring->has_relation() ? n + 2 : n + 1;
  if (ring->nvars() != expected_vars)
    throw UsageError(
        "certify",
        "need " + std::to_string(n) + " derivations on a ring of dimension " +
            std::to_string(n + 1) + "; " + ring->description() +
            " has dimension " +
            std::to_string(ring->nvars() - (ring->has_relation() ? 1 : 0)));

  TriangularReport tri = triangular_basis_check(ds, degree_bound);
  if (!tri.pass)
    throw DomainError("certify",
                      "the derivations do not form a triangular basis");

  CertifyOutcome out{kernel_generator(ds, degree_bound), {}, {}, {}};

  bool all_constant = true;
  std::vector<UniPoly> qs;
  for (std::size_t i = 1; i <= n; ++i) {
    out.preslices.push_back(preslice_search(i, ds, out.f, degree_bound));
    qs.push_back(out.preslices.back().q);
    all_constant = all_constant && out.preslices.back().q.is_constant();
  }

  if (!all_constant) {
    out.fibers = degenerate_fibers(qs);
    return out;
  }

  // Every q_i is the monic constant 1, so each witness is already a slice.
  CoordinateCertificate cert{out.f, {}, std::nullopt, degree_bound,
                             kAssumedHypotheses};
  for (const PresliceResult& pr : out.preslices) cert.slices.push_back(pr.p);

  if (!ring->has_relation()) {
    std::vector<Poly> full = cert.slices;
    full.push_back(cert.f);
    Poly det = jacobian_det(full);
    if (det.is_zero() || !det.is_constant())
      throw DomainError("certify",
                        "jacobian_det(s_1,...,s_n,f) = " + det.to_string() +
                            " is not a nonzero constant");
    cert.jacobian = det.constant_coefficient();
  }
  out.certificate = std::move(cert);
  return out;
}

bool verify_certificate(const std::vector<Derivation>& ds,
                        const CoordinateCertificate& cert) {
  if (ds.empty() || cert.slices.size() != ds.size()) return false;
  const RingPtr& ring = ds[0].ring();
  const Poly one = Poly::constant(ring, Rat(1));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!(apply_derivation(ds[i], cert.slices[i]) == one)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!apply_derivation(ds[j], cert.slices[i]).is_zero()) return false;
    if (!apply_derivation(ds[i], cert.f).is_zero()) return false;
  }
  if (!ring->has_relation()) {
    if (!cert.jacobian || *cert.jacobian == 0) return false;
    std::vector<Poly> full = cert.slices;
    full.push_back(cert.f);
    Poly det = jacobian_det(full);
    if (!(det == Poly::constant(ring, *cert.jacobian))) return false;
  }
  return true;
}

FiberRectification fiber_rectify(const std::vector<Derivation>& ds,
                                 const Poly& f, const Rat& alpha,
                                 unsigned degree_bound) {
  if (ds.empty())
    throw UsageError("fiber-rectify", "at least one derivation required");
  const bool f_is_variable =
      f.terms().size() == 1 && f.terms()[0].coeff == 1 &&
      f.terms()[0].mono.degree() == 1;
  if (!f_is_variable)
    throw UsageError(
        "fiber-rectify",
        "f must be a distinguished ring variable: quotienting by (P, f - "
        "alpha) for general f needs multi-generator ideal machinery, which "
        "is out of scope");

  FiberModel model =
      build_fiber_model(ds, f, alpha, /*eliminate_linear=*/true);

  if (fiber_dependence_check(ds, f, alpha, degree_bound))
    throw DomainError("fiber-rectify",
                      "alpha = " + rat_to_string(alpha) +
                          " is a degenerate fiber: the induced derivations "
                          "are linearly dependent on A/(f - alpha)");

  FiberRectification out{alpha,
                         model.ring,
                         model.induced,
                         rectify_full(model.induced, degree_bound),
                         model.eliminated_variable,
                         model.eliminated_value};
  return out;
}

std::vector<Derivation> mates_to_derivations(const PolyAuto& f_map) {
  const RingPtr& ring = f_map.ring();
  if (ring->has_relation())
    throw UsageError("mates", "mates are defined over free rings only");
  const std::size_t n = ring->nvars();

  std::vector<std::vector<Poly>> jac(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      jac[i].push_back(derive_partial(f_map.image(i), j));
  Poly det = poly_matrix_det(jac, ring);
  if (det.is_zero() || !det.is_constant())
    throw DomainError("mates",
                      "Jacobian determinant " + det.to_string() +
                          " is not a nonzero constant; F is not certified as "
                          "an automorphism by this criterion");
  const Rat det_value = det.constant_coefficient();

  // Adjugate: adj[j][i] = (-1)^{i+j} * minor(i, j); J^{-1} = adj / det.
  std::vector<std::vector<Poly>> inverse(n, std::vector<Poly>(n, Poly(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Poly>> minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Poly> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          row.push_back(jac[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Poly cof = minor.empty() ? Poly::constant(ring, Rat(1))
                               : poly_matrix_det(minor, ring);
      if ((i + j) % 2) cof = -cof;
      inverse[j][i] = cof / det_value;
    }
  }

  // D_i = sum_j (J^{-1})_{j,i} d/dx_j.
  std::vector<Derivation> mates;
  mates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) images.push_back(inverse[j][i]);
    mates.push_back(Derivation::from_images(ring, std::move(images)));
  }

  // D_i(F_j) = delta_ij and pairwise commutation, verified exactly.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly expected = Poly::constant(ring, Rat(i == j ? 1 : 0));
      if (!(apply_derivation(mates[i], f_map.image(j)) == expected))
        throw std::logic_error("mates: D_i(F_j) != delta_ij");
    }
    for (std::size_t j = i + 1; j < n; ++j)
      if (!lie_bracket(mates[i], mates[j]).is_zero())
        throw std::logic_error("mates: derivations do not commute");
  }
  return mates;
}

}  // namespace lnd

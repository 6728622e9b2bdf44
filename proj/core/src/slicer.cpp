#include "lnd/slicer.hpp"

#include <algorithm>
#include <unordered_map>

#include "lnd/errors.hpp"
#include "lnd/invariants.hpp"
#include "lnd/linalg.hpp"

namespace lnd {

namespace {

void require_family(const std::vector<Derivation>& ds, const char* stage) {
  if (ds.empty()) throw UsageError(stage, "at least one derivation required");
  for (const Derivation& d : ds)
    if (!same_ring(d.ring(), ds[0].ring()))
      throw UsageError(stage, "derivations live in different rings");
}

class RowIndexer {
public:
  explicit RowIndexer(std::size_t slots) : per_slot_(slots) {}
  std::size_t row(std::size_t slot, const Mono& m) {
    auto [it, inserted] = per_slot_[slot].emplace(m, next_);
    if (inserted) ++next_;
    return it->second;
  }
  std::size_t count() const { return next_; }

private:
  std::vector<std::unordered_map<Mono, std::size_t, MonoHash>> per_slot_;
  std::size_t next_ = 0;
};

struct PresliceVector {
  std::vector<Rat> p_coeffs;
  std::vector<Rat> mu;
};

struct PresliceSolutions {
  std::vector<Mono> p_monos;
  std::vector<PresliceVector> vectors;
};

// Homogeneous system over unknown p (normal-form monomials of degree <=
// bound) and mu: D_j(p) = 0 for the zero-constraint derivations and
// D(p) = sum_k mu_k targets[k] for the target derivation.
PresliceSolutions preslice_solutions(const std::vector<Derivation>& zeros,
                                     const Derivation& target,
                                     const std::vector<Poly>& targets,
                                     unsigned degree_bound) {
  const RingPtr& ring = target.ring();
  PresliceSolutions out;
  out.p_monos = monomials_up_to(ring, degree_bound);
  const std::size_t ncols_p = out.p_monos.size();
  const std::size_t slots = zeros.size() + 1;
  const std::size_t target_slot = zeros.size();

  std::vector<std::vector<Poly>> images(slots);
  RowIndexer rows(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    const Derivation& d = s < zeros.size() ? zeros[s] : target;
    images[s].reserve(ncols_p);
    for (const Mono& m : out.p_monos) {
      Poly dm = apply_derivation(d, Poly::monomial(ring, m, Rat(1)));
      for (const Term& t : dm.terms()) rows.row(s, t.mono);
      images[s].push_back(std::move(dm));
    }
  }
  for (const Poly& tgt : targets)
    for (const Term& t : tgt.terms()) rows.row(target_slot, t.mono);

  RatMatrix system(rows.count(), ncols_p + targets.size());
  for (std::size_t s = 0; s < slots; ++s)
    for (std::size_t c = 0; c < ncols_p; ++c)
      for (const Term& t : images[s][c].terms())
        system.at(rows.row(s, t.mono), c) = t.coeff;
  for (std::size_t k = 0; k < targets.size(); ++k)
    for (const Term& t : targets[k].terms())
      system.at(rows.row(target_slot, t.mono), ncols_p + k) = -t.coeff;

  for (const std::vector<Rat>& v : nullspace(system)) {
    PresliceVector pv;
    pv.p_coeffs.assign(v.begin(), v.begin() + ncols_p);
    pv.mu.assign(v.begin() + ncols_p, v.end());
    out.vectors.push_back(std::move(pv));
  }
  return out;
}

// Affine witness: D_j(p) = 0 for the zero constraints and D(p) = rhs.
std::optional<Poly> preslice_witness(const std::vector<Derivation>& zeros,
                                     const Derivation& target, const Poly& rhs,
                                     unsigned degree_bound) {
  const RingPtr& ring = target.ring();
  const std::vector<Mono> p_monos = monomials_up_to(ring, degree_bound);
  const std::size_t slots = zeros.size() + 1;
  const std::size_t target_slot = zeros.size();

  std::vector<std::vector<Poly>> images(slots);
  RowIndexer rows(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    const Derivation& d = s < zeros.size() ? zeros[s] : target;
    images[s].reserve(p_monos.size());
    for (const Mono& m : p_monos) {
      Poly dm = apply_derivation(d, Poly::monomial(ring, m, Rat(1)));
      for (const Term& t : dm.terms()) rows.row(s, t.mono);
      images[s].push_back(std::move(dm));
    }
  }
  for (const Term& t : rhs.terms()) rows.row(target_slot, t.mono);

  RatMatrix system(rows.count(), p_monos.size());
  std::vector<Rat> b(rows.count(), Rat(0));
  for (std::size_t s = 0; s < slots; ++s)
    for (std::size_t c = 0; c < p_monos.size(); ++c)
      for (const Term& t : images[s][c].terms())
        system.at(rows.row(s, t.mono), c) = t.coeff;
  for (const Term& t : rhs.terms()) b[rows.row(target_slot, t.mono)] = t.coeff;

  auto solution = solve(system, b);
  if (!solution) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t c = 0; c < p_monos.size(); ++c)
    if ((*solution)[c] != 0) terms.push_back(Term{p_monos[c], (*solution)[c]});
  return Poly::from_terms(ring, std::move(terms));
}

Poly combine_targets(const std::vector<Poly>& targets,
                     const std::vector<Rat>& mu, const RingPtr& ring) {
  Poly acc(ring);
  for (std::size_t k = 0; k < targets.size(); ++k)
    if (mu[k] != 0) acc += targets[k] * mu[k];
  return normal_form(acc);
}

}  // namespace

TriangularReport triangular_basis_check(const std::vector<Derivation>& ds,
                                        unsigned degree_bound) {
  require_family(ds, "triangular");
  TriangularReport report;
  report.degree_bound = degree_bound;
  report.pass = true;

  // Invariant bases A_i = ker D_1 cap ... cap ker D_{i-1}, shared across
  // pairs with the same i.
  std::vector<std::vector<Poly>> invariant_bases(ds.size());
  for (std::size_t i = 1; i < ds.size(); ++i) {
    std::vector<Derivation> front(ds.begin(), ds.begin() + i);
    invariant_bases[i] = invariant_space(front, degree_bound).basis;
  }

  for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      Derivation bracket = lie_bracket(ds[i], ds[j]);
      std::vector<Derivation> span_basis(ds.begin(), ds.begin() + i);
      auto coefficients = k_span_membership(bracket, span_basis);

      bool commutes = true;
      if (i == 0) {
        // A_1 = A: the bracket must vanish identically.
        commutes = bracket.is_zero();
      } else {
        for (const Poly& v : invariant_bases[i]) {
          if (!apply_derivation(bracket, v).is_zero()) {
            commutes = false;
            break;
          }
        }
      }

      TriangularPairCheck check;
      check.i = i + 1;
      check.j = j + 1;
      check.span_coefficients = coefficients;
      check.restricted_commutes = commutes;
      report.pass = report.pass && coefficients.has_value() && commutes;
      report.pairs.push_back(std::move(check));
    }
  }
  return report;
}

PresliceResult preslice_search(std::size_t index,
                               const std::vector<Derivation>& ds,
                               const Poly& f, unsigned degree_bound) {
  require_family(ds, "preslice");
  if (index < 1 || index > ds.size())
    throw UsageError("preslice", "index out of range (1-based)");
  const RingPtr& ring = ds[0].ring();
  if (!same_ring(f.ring(), ring))
    throw UsageError("preslice", "f lives in a different ring");
  if (f.is_constant())
    throw UsageError("preslice", "f must be nonconstant");
  for (std::size_t j = 0; j < ds.size(); ++j)
    if (!apply_derivation(ds[j], f).is_zero())
      throw UsageError("preslice",
                       "f is not invariant under derivation " +
                           std::to_string(j + 1));

  // Targets: powers of f, ascending.
  std::vector<Poly> powers;
  powers.reserve(degree_bound + 1);
  Poly power = Poly::constant(ring, Rat(1));
  powers.push_back(power);
  for (unsigned k = 1; k <= degree_bound; ++k) {
    power = normal_form(power * f);
    powers.push_back(power);
  }

  // Guard: the powers of f must be linearly independent (they are, over a
  // domain finitely generated over Q with f nonconstant).
  {
    RowIndexer rows(1);
    for (const Poly& p : powers)
      for (const Term& t : p.terms()) rows.row(0, t.mono);
    RatMatrix m(rows.count(), powers.size());
    for (std::size_t k = 0; k < powers.size(); ++k)
      for (const Term& t : powers[k].terms())
        m.at(rows.row(0, t.mono), k) = t.coeff;
    if (rank(m) != powers.size())
      throw InconclusiveError(
          "preslice",
          "powers of f are linearly dependent; the ring violates the "
          "domain hypotheses assumed by the pipeline");
  }

  std::vector<Derivation> zeros(ds.begin(), ds.begin() + (index - 1));
  PresliceSolutions sols =
      preslice_solutions(zeros, ds[index - 1], powers, degree_bound);

  // The attainable q's form a subspace of Q[t]; echelonize it.
  std::vector<std::vector<Rat>> mu_rows;
  for (const PresliceVector& v : sols.vectors) {
    bool nonzero = false;
    for (const Rat& c : v.mu)
      if (c != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) mu_rows.push_back(v.mu);
  }
  if (mu_rows.empty())
    throw InconclusiveError(
        "preslice", "no preslice with nonzero q up to degree " +
                        std::to_string(degree_bound) + " (raise the bound)");
  RatMatrix qspace(mu_rows.size(), degree_bound + 1);
  for (std::size_t r = 0; r < mu_rows.size(); ++r)
    for (std::size_t c = 0; c <= degree_bound; ++c)
      qspace.at(r, c) = mu_rows[r][c];
  std::size_t qrank = rref(qspace).size();

  UniPoly q;
  for (std::size_t r = 0; r < qrank; ++r) {
    std::vector<Rat> coeffs;
    coeffs.reserve(degree_bound + 1);
    for (std::size_t c = 0; c <= degree_bound; ++c)
      coeffs.push_back(qspace.at(r, c));
    UniPoly candidate = UniPoly::from_coefficients(std::move(coeffs));
    q = r == 0 ? candidate.monic() : unipoly_gcd(q, candidate);
  }

  Poly rhs = unipoly_at(q, f);
  auto witness = preslice_witness(zeros, ds[index - 1], rhs, degree_bound);
  if (!witness)
    throw InconclusiveError(
        "preslice",
        "the canonical q (gcd of attainable ones) is not attained by any "
        "preslice of degree <= " +
            std::to_string(degree_bound) + " (raise the bound)");

  PresliceResult out{index, *witness, q, degree_bound};
  return out;
}

FiberReport degenerate_fibers(const std::vector<UniPoly>& qs) {
  if (qs.empty()) throw UsageError("fibers", "no q polynomials given");
  UniPoly product = UniPoly::constant(Rat(1));
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i].is_zero())
      throw DomainError("fibers", "q_" + std::to_string(i + 1) +
                                      " is zero (preslice failure upstream)");
    product = product * qs[i];
  }

  FiberReport report;
  if (product.is_constant()) return report;

  for (const auto& [factor, multiplicity] : squarefree_decomposition(product)) {
    UniPoly residual = factor;
    for (const auto& [alpha, mult_in_factor] : rational_roots(factor)) {
      (void)mult_in_factor;  // always 1 inside a squarefree factor
      UniPoly linear = UniPoly::from_coefficients({-alpha, Rat(1)});
      residual = residual.divmod(linear).first;

      std::size_t witness = 0;
      for (std::size_t i = 0; i < qs.size(); ++i) {
        if (qs[i].evaluate(alpha) == 0) {
          witness = i + 1;
          break;
        }
      }
      report.factors.push_back(FiberFactor{linear, multiplicity, true});
      report.rational_roots.push_back(
          FiberRationalRoot{alpha, multiplicity, witness});
    }
    if (residual.degree() > 0) {
      bool certified = residual.degree() <= 3;
      report.factors.push_back(FiberFactor{residual, multiplicity, certified});
    }
  }
  std::sort(report.rational_roots.begin(), report.rational_roots.end(),
            [](const FiberRationalRoot& a, const FiberRationalRoot& b) {
              return a.alpha < b.alpha;
            });
  return report;
}

FiberModel build_fiber_model(const std::vector<Derivation>& ds, const Poly& f,
                             const Rat& alpha, bool eliminate_linear) {
  require_family(ds, "fiber");
  const RingPtr& ring = ds[0].ring();
  if (!same_ring(f.ring(), ring))
    throw UsageError("fiber", "f lives in a different ring");
  if (f.is_constant()) throw UsageError("fiber", "f must be nonconstant");
  for (std::size_t j = 0; j < ds.size(); ++j)
    if (!apply_derivation(ds[j], f).is_zero())
      throw UsageError("fiber", "f is not invariant under derivation " +
                                    std::to_string(j + 1));

  // f as a distinguished variable?
  std::optional<std::size_t> f_var;
  if (f.terms().size() == 1 && f.terms()[0].coeff == 1 &&
      f.terms()[0].mono.degree() == 1) {
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      if (f.terms()[0].mono.exp(v) == 1) f_var = v;
  }

  FiberModel model;
  if (f_var) {
    // Substitute f = alpha and drop the variable.
    std::vector<std::string> names;
    std::vector<std::optional<std::size_t>> new_index(ring->nvars());
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      if (v == *f_var) continue;
      new_index[v] = names.size();
      names.push_back(ring->variable_name(v));
    }
    if (names.empty())
      throw UsageError("fiber", "fiber of a one-variable ring is a point");
    RingPtr base = Ring::free_ring(names, ring->order());

    auto substitution_into = [&](const RingPtr& target) {
      std::vector<Poly> images;
      images.reserve(ring->nvars());
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        if (v == *f_var) {
          images.push_back(Poly::constant(target, alpha));
        } else {
          images.push_back(Poly::variable(target, *new_index[v]));
        }
      }
      return images;
    };

    RingPtr fiber = base;
    std::optional<std::size_t> eliminated;
    Poly eliminated_value(base);
    if (ring->has_relation()) {
      Poly substituted =
          substitute(ring->relation(), substitution_into(base));
      if (substituted.is_zero()) {
        fiber = base;
      } else if (substituted.is_constant()) {
        throw DomainError("fiber",
                          "the fiber at alpha = " + rat_to_string(alpha) +
                              " is empty: the relation becomes " +
                              substituted.to_string());
      } else {
        fiber = Ring::quotient_ring(base, substituted);
        if (eliminate_linear) {
          // A variable occurring linearly with a constant coefficient can
          // be solved for, making the fiber ring free.
          for (std::size_t w = 0; w < base->nvars() && !eliminated; ++w) {
            Rat coeff(0);
            bool linear = true;
            Poly rest(base);
            for (const Term& t : substituted.terms()) {
              unsigned e = t.mono.exp(w);
              if (e == 0) {
                rest += Poly::monomial(base, t.mono, t.coeff);
              } else if (e == 1 && t.mono.degree() == 1) {
                coeff = t.coeff;
              } else {
                linear = false;
                break;
              }
            }
            if (linear && coeff != 0) {
              eliminated = w;
              eliminated_value = rest / -coeff;
            }
          }
        }
      }
    }

    if (eliminated) {
      // Rebuild without the eliminated variable.
      std::vector<std::string> final_names;
      std::vector<std::optional<std::size_t>> final_index(base->nvars());
      for (std::size_t v = 0; v < base->nvars(); ++v) {
        if (v == *eliminated) continue;
        final_index[v] = final_names.size();
        final_names.push_back(base->variable_name(v));
      }
      if (final_names.empty())
        throw UsageError("fiber", "elimination left no variables");
      RingPtr final_ring = Ring::free_ring(final_names, ring->order());

      std::vector<Poly> base_to_final;
      base_to_final.reserve(base->nvars());
      for (std::size_t v = 0; v < base->nvars(); ++v) {
        if (v == *eliminated) {
          base_to_final.push_back(Poly(final_ring));  // patched below
        } else {
          base_to_final.push_back(Poly::variable(final_ring, *final_index[v]));
        }
      }
      // eliminated_value only involves the surviving variables.
      Poly value_in_final = substitute(eliminated_value, base_to_final);
      base_to_final[*eliminated] = value_in_final;

      std::vector<Poly> old_to_final;
      old_to_final.reserve(ring->nvars());
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        if (v == *f_var) {
          old_to_final.push_back(Poly::constant(final_ring, alpha));
        } else {
          old_to_final.push_back(base_to_final[*new_index[v]]);
        }
      }

      for (const Derivation& d : ds) {
        std::vector<Poly> images;
        images.reserve(final_ring->nvars());
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
          if (v == *f_var || *new_index[v] == *eliminated) continue;
          images.push_back(
              substitute(lift_to_free(d.image(v)), old_to_final));
        }
        Derivation induced =
            Derivation::from_images(final_ring, std::move(images));
        // The eliminated variable's image must be compatible with its value.
        std::size_t old_w = 0;
        for (std::size_t v = 0; v < ring->nvars(); ++v)
          if (v != *f_var && *new_index[v] == *eliminated) old_w = v;
        Poly expected =
            substitute(lift_to_free(d.image(old_w)), old_to_final);
        if (!(apply_derivation(induced, value_in_final) == expected))
          throw DomainError("fiber",
                            "induced derivation is inconsistent with the "
                            "eliminated variable");
        model.induced.push_back(std::move(induced));
      }
      model.ring = final_ring;
      model.eliminated_variable = base->variable_name(*eliminated);
      model.eliminated_value = value_in_final;
      return model;
    }

    // No elimination: induce on `fiber` directly.
    std::vector<Poly> old_to_fiber_free = substitution_into(base);
    for (const Derivation& d : ds) {
      std::vector<Poly> images;
      images.reserve(fiber->nvars());
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        if (v == *f_var) continue;
        Poly img = substitute(lift_to_free(d.image(v)), old_to_fiber_free);
        if (fiber->has_relation()) img = project_to_quotient(img, fiber);
        images.push_back(std::move(img));
      }
      model.induced.push_back(
          Derivation::from_images(fiber, std::move(images)));
    }
    model.ring = fiber;
    return model;
  }

  if (!ring->has_relation()) {
    // General nonconstant f on a free ring: keep the variables and divide
    // by (f - alpha).
    Poly relation = f - Poly::constant(ring, alpha);
    RingPtr fiber = Ring::quotient_ring(ring, relation);
    for (const Derivation& d : ds) {
      std::vector<Poly> images;
      images.reserve(ring->nvars());
      for (std::size_t v = 0; v < ring->nvars(); ++v)
        images.push_back(project_to_quotient(d.image(v), fiber));
      model.induced.push_back(
          Derivation::from_images(fiber, std::move(images)));
    }
    model.ring = fiber;
    return model;
  }

  throw UsageError("fiber",
                   "unsupported ring/f combination: need a free ring, or f a "
                   "distinguished variable on a hypersurface ring");
}

bool fiber_dependence_check(const std::vector<Derivation>& ds, const Poly& f,
                            const Rat& alpha, unsigned degree_bound) {
  FiberModel model =
      build_fiber_model(ds, f, alpha, /*eliminate_linear=*/false);
  const RingPtr& fiber = model.ring;
  const std::vector<Mono> monos = monomials_up_to(fiber, degree_bound);

  // Unknowns: coefficients of the residues g_i over the fiber monomials.
  // Equations: sum_i g_i * D_i(x) = 0 for every fiber generator x.
  RowIndexer rows(fiber->nvars());
  std::vector<std::vector<Poly>> columns;  // per (i, mono)
  columns.reserve(model.induced.size() * monos.size());
  for (const Derivation& d : model.induced) {
    for (const Mono& m : monos) {
      std::vector<Poly> per_generator;
      per_generator.reserve(fiber->nvars());
      Poly mono_poly = Poly::monomial(fiber, m, Rat(1));
      for (std::size_t x = 0; x < fiber->nvars(); ++x) {
        Poly prod = normal_form(mono_poly * d.image(x));
        for (const Term& t : prod.terms()) rows.row(x, t.mono);
        per_generator.push_back(std::move(prod));
      }
      columns.push_back(std::move(per_generator));
    }
  }

  RatMatrix system(rows.count(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t x = 0; x < fiber->nvars(); ++x)
      for (const Term& t : columns[c][x].terms())
        system.at(rows.row(x, t.mono), c) = t.coeff;

  return !nullspace(system).empty();
}

Poly slice_descent(const Poly& p, const std::vector<Derivation>& ds,
                   const std::vector<Poly>& slice_gens, unsigned degree_bound,
                   std::vector<Poly>* trace) {
  require_family(ds, "descent");
  if (ds.size() != slice_gens.size() + 1)
    throw UsageError("descent",
                     "need one derivation per slice generator plus the "
                     "derivation being sliced");
  const RingPtr& ring = ds[0].ring();
  if (!same_ring(p.ring(), ring))
    throw UsageError("descent", "p lives in a different ring");

  Poly current = p;
  std::optional<Mono> previous_lead;
  for (;;) {
    Poly q_image = apply_derivation(ds[0], current);
    if (q_image.is_zero())
      throw DomainError("descent",
                        "D_1(p) = 0: p is an invariant, not a preslice");

    if (slice_gens.empty()) {
      if (!q_image.is_constant())
        throw InconclusiveError(
            "descent", "D_1(p) is not constant and there are no slice "
                       "generators to descend along");
      return current / q_image.constant_coefficient();
    }

    auto expression =
        express_in_subalgebra(q_image, slice_gens, degree_bound);
    if (!expression)
      throw InconclusiveError(
          "descent", "q = D_1(p) is not expressible in the slice generators "
                     "within degree " +
                         std::to_string(degree_bound));

    // Strict lexicographic descent of q (s_2 >> s_3 >> ...): the proof's
    // termination measure, asserted per step.
    if (!expression->is_constant()) {
      const Mono& lead = expression->leading_term().mono;
      if (previous_lead &&
          compare(lead, *previous_lead, MonomialOrder::Lex) >= 0)
        throw std::logic_error(
            "slice_descent: lexicographic degree of q did not decrease");
      previous_lead = lead;

      std::size_t direction = slice_gens.size();
      for (std::size_t v = 0; v < slice_gens.size(); ++v) {
        if (!derive_partial(*expression, v).is_zero()) {
          direction = v;
          break;
        }
      }
      if (direction == slice_gens.size())
        throw std::logic_error("slice_descent: nonconstant q with vanishing "
                               "partials");
      current = apply_derivation(ds[direction + 1], current);
      if (trace) trace->push_back(current);
      continue;
    }

    Rat c = expression->constant_coefficient();
    if (c == 0)
      throw std::logic_error("slice_descent: zero constant expression");
    return current / c;
  }
}

std::vector<Poly> rectify_full(const std::vector<Derivation>& ds,
                               unsigned degree_bound) {
  require_family(ds, "rectify");
  const RingPtr& ring = ds[0].ring();

  TriangularReport tri = triangular_basis_check(ds, degree_bound);
  if (!tri.pass)
    throw DomainError("rectify",
                      "the derivations do not form a triangular basis");
  for (const Poly& v : invariant_space(ds, degree_bound).basis) {
    if (!v.is_constant())
      throw DomainError("rectify",
                        "nonconstant common kernel (found invariant " +
                            v.to_string() +
                            "); the quotient is not zero-dimensional");
  }

  const std::size_t n = ds.size();
  std::vector<Poly> slices(n, Poly(ring));
  for (std::size_t i = n; i-- > 0;) {
    std::vector<Poly> gens(slices.begin() + i + 1, slices.end());

    // Targets: monomials in the later slices, ascending degree.
    std::vector<Poly> targets;
    if (gens.empty()) {
      targets.push_back(Poly::constant(ring, Rat(1)));
    } else {
      RingPtr abstract = subalgebra_ring(gens.size());
      std::vector<Mono> abstract_monos =
          monomials_up_to(abstract, degree_bound);
      std::reverse(abstract_monos.begin(), abstract_monos.end());
      for (const Mono& alpha : abstract_monos) {
        Poly prod = Poly::constant(ring, Rat(1));
        for (std::size_t v = 0; v < gens.size(); ++v)
          if (alpha.exp(v)) prod = prod * gens[v].pow(alpha.exp(v));
        targets.push_back(normal_form(prod));
      }
    }

    std::vector<Derivation> zeros(ds.begin(), ds.begin() + i);
    PresliceSolutions sols =
        preslice_solutions(zeros, ds[i], targets, degree_bound);

    std::optional<Poly> witness;
    for (const PresliceVector& v : sols.vectors) {
      Poly q_poly = combine_targets(targets, v.mu, ring);
      if (q_poly.is_zero()) continue;
      std::vector<Term> terms;
      for (std::size_t c = 0; c < sols.p_monos.size(); ++c)
        if (v.p_coeffs[c] != 0)
          terms.push_back(Term{sols.p_monos[c], v.p_coeffs[c]});
      witness = Poly::from_terms(ring, std::move(terms));
      break;
    }
    if (!witness)
      throw InconclusiveError(
          "rectify", "no preslice for derivation " + std::to_string(i + 1) +
                         " within degree " + std::to_string(degree_bound) +
                         " (raise the bound)");

    std::vector<Derivation> tail(ds.begin() + i, ds.end());
    slices[i] = slice_descent(*witness, tail, gens, degree_bound);
  }

  // Proposition-1 pattern, re-checked from scratch.
  for (std::size_t i = 0; i < n; ++i) {
    Poly di_si = apply_derivation(ds[i], slices[i]);
    if (!(di_si == Poly::constant(ring, Rat(1))))
      throw std::logic_error("rectify_full: D_i(s_i) != 1");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!apply_derivation(ds[i], slices[j]).is_zero())
        throw std::logic_error("rectify_full: D_i(s_j) != 0 for j > i");
  }
  if (!ring->has_relation() && ring->nvars() == n) {
    Poly det = jacobian_det(slices);
    if (det.is_zero() || !det.is_constant())
      throw DomainError("rectify",
                        "slice Jacobian is not a nonzero constant");
  }
  return slices;
}

}  // namespace lnd

#include "lnd/invariants.hpp"

#include <algorithm>
#include <unordered_map>

#include "lnd/errors.hpp"
#include "lnd/linalg.hpp"

namespace lnd {

std::vector<Mono> monomials_up_to(const RingPtr& ring, unsigned bound) {
  const std::size_t n = ring->nvars();
  const Mono* reduced_against = nullptr;
  if (ring->has_relation())
    reduced_against = &ring->relation().leading_term().mono;

  std::vector<Mono> out;
  Mono current(n);
  auto emit = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == n) {
      if (!reduced_against || !reduced_against->divides(current))
        out.push_back(current);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      current.exp(var) = e;
      self(self, var + 1, remaining - e);
    }
    current.exp(var) = 0;
  };
  emit(emit, 0, bound);

  const MonomialOrder order = ring->order();
  std::sort(out.begin(), out.end(), [order](const Mono& a, const Mono& b) {
    return compare(a, b, order) > 0;
  });
  return out;
}

namespace {

// Indexes equation rows by (derivation slot, monomial).
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

Poly poly_from_coefficients(const RingPtr& ring,
                            const std::vector<Mono>& monos,
                            const std::vector<Rat>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t c = 0; c < monos.size(); ++c)
    if (coeffs[c] != 0) terms.push_back(Term{monos[c], coeffs[c]});
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace

InvariantBasis invariant_space(const std::vector<Derivation>& ds,
                               unsigned degree_bound) {
  if (ds.empty())
    throw UsageError("invariants", "at least one derivation required");
  const RingPtr& ring = ds[0].ring();
  for (const Derivation& d : ds)
    if (!same_ring(d.ring(), ring))
      throw UsageError("invariants", "derivations live in different rings");

  const std::vector<Mono> monos = monomials_up_to(ring, degree_bound);

  // Image of each candidate monomial under each derivation.
  std::vector<std::vector<Poly>> images(ds.size());
  RowIndexer rows(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    images[i].reserve(monos.size());
    for (const Mono& m : monos) {
      Poly dm = apply_derivation(ds[i], Poly::monomial(ring, m, Rat(1)));
      for (const Term& t : dm.terms()) rows.row(i, t.mono);
      images[i].push_back(std::move(dm));
    }
  }

  RatMatrix system(rows.count(), monos.size());
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t c = 0; c < monos.size(); ++c)
      for (const Term& t : images[i][c].terms())
        system.at(rows.row(i, t.mono), c) = t.coeff;

  InvariantBasis out;
  out.degree_bound = degree_bound;
  for (const std::vector<Rat>& v : nullspace(system))
    out.basis.push_back(poly_from_coefficients(ring, monos, v));

  const MonomialOrder order = ring->order();
  std::sort(out.basis.begin(), out.basis.end(),
            [order](const Poly& a, const Poly& b) {
              if (a.is_zero() || b.is_zero()) return b.is_zero() < a.is_zero();
              return compare(a.leading_term().mono, b.leading_term().mono,
                             order) < 0;
            });
  return out;
}

Poly kernel_generator(const std::vector<Derivation>& ds,
                      unsigned degree_bound) {
  if (ds.empty())
    throw UsageError("invariants", "at least one derivation required");
  const RingPtr& ring = ds[0].ring();

  // The first bound exhibiting a nonconstant invariant pins the minimal
  // degree exactly.
  std::optional<Poly> generator;
  for (unsigned d = 1; d <= degree_bound && !generator; ++d) {
    InvariantBasis space = invariant_space(ds, d);
    std::vector<Poly> nonconstant;
    for (const Poly& v : space.basis)
      if (!v.is_constant()) nonconstant.push_back(v);
    if (nonconstant.empty()) continue;
    const MonomialOrder order = ring->order();
    std::sort(nonconstant.begin(), nonconstant.end(),
              [order](const Poly& a, const Poly& b) {
                if (a.total_degree() != b.total_degree())
                  return a.total_degree() < b.total_degree();
                return compare(a.leading_term().mono, b.leading_term().mono,
                               order) < 0;
              });
    Poly f = nonconstant.front();
    f -= Poly::constant(ring, f.constant_coefficient());
    f = f / f.leading_term().coeff;
    generator = f;
  }
  if (!generator)
    throw InconclusiveError("kernel",
                            "no nonconstant invariant up to degree " +
                                std::to_string(degree_bound) +
                                " (raise the bound, or the common kernel is "
                                "trivial)");

  // Every invariant up to the bound must be a polynomial in f.
  InvariantBasis full = invariant_space(ds, degree_bound);
  for (const Poly& v : full.basis) {
    if (!express_in_subalgebra(v, {*generator}, degree_bound))
      throw InconclusiveError(
          "kernel",
          "invariant " + v.to_string() + " is not a polynomial in f = " +
              generator->to_string() + " up to degree " +
              std::to_string(degree_bound) +
              " (bound too small, or the one-generator hypothesis fails)");
  }
  return *generator;
}

RingPtr subalgebra_ring(std::size_t generator_count) {
  if (generator_count == 0)
    throw UsageError("invariants", "no subalgebra generators");
  std::vector<std::string> names;
  if (generator_count == 1) {
    names.push_back("t");
  } else {
    for (std::size_t i = 1; i <= generator_count; ++i)
      names.push_back("t" + std::to_string(i));
  }
  return Ring::free_ring(std::move(names), MonomialOrder::Lex);
}

std::optional<Poly> express_in_subalgebra(const Poly& g,
                                          const std::vector<Poly>& gens,
                                          unsigned degree_bound) {
  if (gens.empty())
    throw UsageError("invariants", "no subalgebra generators");
  const RingPtr& ring = g.ring();
  for (const Poly& gen : gens)
    if (!same_ring(gen.ring(), ring))
      throw UsageError("invariants", "generators live in a different ring");

  RingPtr abstract = subalgebra_ring(gens.size());
  const std::vector<Mono> abstract_monos =
      monomials_up_to(abstract, degree_bound);

  // Column c: the ring element gens^alpha for abstract monomial alpha.
  std::vector<Poly> columns;
  columns.reserve(abstract_monos.size());
  for (const Mono& alpha : abstract_monos) {
    Poly prod = Poly::constant(ring, Rat(1));
    for (std::size_t v = 0; v < gens.size(); ++v)
      if (alpha.exp(v)) prod = prod * gens[v].pow(alpha.exp(v));
    columns.push_back(normal_form(prod));
  }

  RowIndexer rows(1);
  for (const Poly& col : columns)
    for (const Term& t : col.terms()) rows.row(0, t.mono);
  for (const Term& t : g.terms()) rows.row(0, t.mono);

  RatMatrix system(rows.count(), columns.size());
  std::vector<Rat> rhs(rows.count(), Rat(0));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const Term& t : columns[c].terms())
      system.at(rows.row(0, t.mono), c) = t.coeff;
  for (const Term& t : g.terms()) rhs[rows.row(0, t.mono)] = t.coeff;

  auto solution = solve(system, rhs);
  if (!solution) return std::nullopt;

  std::vector<Term> terms;
  for (std::size_t c = 0; c < abstract_monos.size(); ++c)
    if ((*solution)[c] != 0)
      terms.push_back(Term{abstract_monos[c], (*solution)[c]});
  return Poly::from_terms(abstract, std::move(terms));
}

Poly evaluate_expression(const Poly& expression,
                         const std::vector<Poly>& gens) {
  if (gens.empty())
    throw UsageError("invariants", "no subalgebra generators");
  if (expression.ring()->nvars() != gens.size())
    throw UsageError("invariants",
                     "expression arity does not match generator count");
  return normal_form(substitute(expression, gens));
}

}  // namespace lnd

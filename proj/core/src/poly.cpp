#include "lnd/poly.hpp"

#include <algorithm>
#include <map>

#include "lnd/errors.hpp"

namespace lnd {

namespace {

void require_same_ring(const Poly& a, const Poly& b, const char* what) {
  if (!same_ring(a.ring(), b.ring()))
    throw UsageError("poly", std::string(what) + ": ring mismatch");
}

struct MonoDesc {
  MonomialOrder order;
  bool operator()(const Mono& a, const Mono& b) const {
    return compare(a, b, order) > 0;
  }
};

}  // namespace

Poly Poly::constant(RingPtr ring, Rat value) {
  Poly p(std::move(ring));
  if (value != 0)
    p.terms_.push_back(Term{Mono(p.ring_->nvars()), std::move(value)});
  return p;
}

Poly Poly::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->nvars())
    throw UsageError("poly", "variable index out of range");
  Mono m(ring->nvars());
  m.exp(index) = 1;
  return monomial(ring, std::move(m), Rat(1));
}

Poly Poly::monomial(RingPtr ring, Mono mono, Rat coeff) {
  Poly p(std::move(ring));
  if (mono.nvars() != p.ring_->nvars())
    throw UsageError("poly", "monomial arity mismatch");
  if (coeff != 0) p.terms_.push_back(Term{std::move(mono), std::move(coeff)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::map<Mono, Rat, MonoDesc> acc(MonoDesc{ring->order()});
  for (auto& t : terms) {
    if (t.mono.nvars() != ring->nvars())
      throw UsageError("poly", "term arity mismatch");
    auto [it, inserted] = acc.emplace(std::move(t.mono), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  Poly p(std::move(ring));
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rat Poly::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.is_one())
    return terms_.back().coeff;
  return Rat(0);
}

const Term& Poly::leading_term() const {
  if (terms_.empty())
    throw UsageError("poly", "zero polynomial has no leading term");
  return terms_.front();
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Rat Poly::coefficient(const Mono& mono) const {
  for (const Term& t : terms_)
    if (t.mono == mono) return t.coeff;
  return Rat(0);
}

Poly Poly::operator-() const {
  Poly out(ring_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back(Term{t.mono, -t.coeff});
  return out;
}

Poly Poly::operator+(const Poly& other) const {
  require_same_ring(*this, other, "add");
  const MonomialOrder ord = ring_->order();
  Poly out(ring_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = compare(terms_[i].mono, other.terms_[j].mono, ord);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(other.terms_[j++]);
    } else {
      Rat sum = terms_[i].coeff + other.terms_[j].coeff;
      if (sum != 0) out.terms_.push_back(Term{terms_[i].mono, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  require_same_ring(*this, other, "multiply");
  std::map<Mono, Rat, MonoDesc> acc(MonoDesc{ring_->order()});
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      Mono m = a.mono * b.mono;
      Rat c = a.coeff * b.coeff;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
  }
  Poly out(ring_);
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back(Term{m, c});
  return out;
}

Poly Poly::operator*(const Rat& scalar) const {
  if (scalar == 0) return Poly(ring_);
  Poly out(ring_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    out.terms_.push_back(Term{t.mono, t.coeff * scalar});
  return out;
}

Poly Poly::operator/(const Rat& scalar) const {
  if (scalar == 0) throw UsageError("poly", "division by zero scalar");
  return *this * (Rat(1) / scalar);
}

Poly Poly::pow(unsigned n) const {
  Poly result = Poly::constant(ring_, Rat(1));
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) ||
        terms_[i].coeff != other.terms_[i].coeff)
      return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rat a = t.coeff;
    bool negative = a < 0;
    if (negative) a = -a;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono_str;
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      unsigned e = t.mono.exp(v);
      if (e == 0) continue;
      if (!mono_str.empty()) mono_str += "*";
      mono_str += ring_->variable_name(v);
      if (e > 1) mono_str += "^" + std::to_string(e);
    }
    if (mono_str.empty()) {
      out += rat_to_string(a);
    } else if (a == 1) {
      out += mono_str;
    } else {
      out += rat_to_string(a) + "*" + mono_str;
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod_single(const Poly& g, const Poly& divisor) {
  require_same_ring(g, divisor, "divmod");
  if (g.ring()->has_relation())
    throw UsageError("poly", "divmod runs on free-ring representatives");
  if (divisor.is_zero()) throw UsageError("poly", "division by zero");
  const Term& lt = divisor.leading_term();

  Poly quotient(g.ring());
  Poly remainder(g.ring());
  Poly rest = g;
  while (!rest.is_zero()) {
    const Term& head = rest.leading_term();
    if (lt.mono.divides(head.mono)) {
      Poly factor = Poly::monomial(g.ring(), lt.mono.quotient_of(head.mono),
                                   head.coeff / lt.coeff);
      quotient += factor;
      rest -= factor * divisor;
    } else {
      Poly head_poly = Poly::monomial(g.ring(), head.mono, head.coeff);
      remainder += head_poly;
      rest -= head_poly;
    }
  }
  return {quotient, remainder};
}

Poly normal_form(const Poly& g) {
  if (!g.ring()->has_relation()) return g;
  return project_to_quotient(lift_to_free(g), g.ring());
}

Poly derive_partial(const Poly& g, std::size_t var) {
  if (var >= g.ring()->nvars())
    throw UsageError("poly", "unknown variable index");
  Poly out(g.ring()->has_relation() ? g.ring()->free_twin() : g.ring());
  std::vector<Term> terms;
  for (const Term& t : g.terms()) {
    unsigned e = t.mono.exp(var);
    if (e == 0) continue;
    Mono m = t.mono;
    m.exp(var) = e - 1;
    terms.push_back(Term{std::move(m), t.coeff * Rat(e)});
  }
  Poly formal = Poly::from_terms(out.ring(), std::move(terms));
  if (!g.ring()->has_relation()) return formal;
  return project_to_quotient(formal, g.ring());
}

Poly derive_partial(const Poly& g, std::string_view var_name) {
  auto idx = g.ring()->variable_index(var_name);
  if (!idx)
    throw UsageError("poly",
                     "unknown variable \"" + std::string(var_name) + "\"");
  return derive_partial(g, *idx);
}

Poly substitute(const Poly& g, const std::vector<Poly>& images) {
  if (images.size() != g.ring()->nvars())
    throw UsageError("poly", "substitute: one image per variable required");
  const RingPtr& target = images.empty() ? g.ring() : images[0].ring();
  for (const Poly& img : images)
    if (!same_ring(img.ring(), target))
      throw UsageError("poly", "substitute: images live in different rings");

  Poly out(target);
  for (const Term& t : g.terms()) {
    Poly prod = Poly::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      unsigned e = t.mono.exp(v);
      if (e) prod = prod * images[v].pow(e);
    }
    out += prod;
  }
  return out;
}

namespace {

Poly det_recursive(const std::vector<std::vector<Poly>>& m,
                   std::vector<std::size_t> cols, const RingPtr& ring,
                   std::size_t row) {
  if (cols.size() == 1)
    return m[row][cols[0]];
  Poly acc(ring);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& head = m[row][cols[k]];
    if (head.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Poly minor = det_recursive(m, std::move(rest), ring, row + 1);
    Poly contrib = head * minor;
    if (k % 2) contrib = -contrib;
    acc += contrib;
  }
  return acc;
}

}  // namespace

Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m,
                     const RingPtr& ring) {
  if (m.empty()) throw UsageError("poly", "determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size())
      throw UsageError("poly", "determinant needs a square matrix");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return det_recursive(m, std::move(cols), ring, 0);
}

Poly jacobian_det(const std::vector<Poly>& fs) {
  if (fs.empty()) throw UsageError("jacobian", "empty map");
  const RingPtr& ring = fs[0].ring();
  if (ring->has_relation())
    throw UsageError("jacobian",
                     "jacobian_det is defined on free rings only");
  if (fs.size() != ring->nvars())
    throw UsageError("jacobian",
                     "need exactly one polynomial per ring variable");
  for (const Poly& f : fs)
    if (!same_ring(f.ring(), ring))
      throw UsageError("jacobian", "ring mismatch");

  std::vector<std::vector<Poly>> m(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < ring->nvars(); ++j)
      m[i].push_back(derive_partial(fs[i], j));
  return poly_matrix_det(m, ring);
}

Poly lift_to_free(const Poly& g) {
  if (!g.ring()->has_relation()) return g;
  std::vector<Term> terms(g.terms().begin(), g.terms().end());
  return Poly::from_terms(g.ring()->free_twin(), std::move(terms));
}

Poly project_to_quotient(const Poly& g_free, const RingPtr& quotient) {
  if (!quotient->has_relation())
    throw UsageError("poly", "project_to_quotient needs a quotient ring");
  if (!same_ring(g_free.ring(), quotient->free_twin()))
    throw UsageError("poly", "representative lives in the wrong ring");
  Poly reduced = divmod_single(g_free, quotient->relation()).second;
  std::vector<Term> terms(reduced.terms().begin(), reduced.terms().end());
  return Poly::from_terms(quotient, std::move(terms));
}

}  // namespace lnd

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lnd/mono.hpp"
#include "lnd/rat.hpp"
#include "lnd/ring.hpp"

namespace lnd {

struct Term {
  Mono mono;
  Rat coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in the ring's monomial order, descending; no stored
/// coefficient is zero; the zero polynomial has no terms. Arithmetic acts
/// on representatives (no implicit quotient reduction): apply normal_form
/// where a canonical quotient representative is required.
class Poly {
public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, Rat value);
  static Poly variable(const RingPtr& ring, std::size_t index);
  static Poly monomial(RingPtr ring, Mono mono, Rat coeff);
  /// Sorts, merges equal monomials, drops zero coefficients.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The coefficient of the constant monomial (0 when absent).
  Rat constant_coefficient() const;
  const Term& leading_term() const;
  unsigned total_degree() const;  // 0 for the zero polynomial
  Rat coefficient(const Mono& mono) const;

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rat& scalar) const;
  Poly operator/(const Rat& scalar) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  Poly pow(unsigned n) const;

  bool operator==(const Poly& other) const;

  /// Grammar-compatible rendering ("X^2*Y - 1/2*Z", "0").
  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;  // descending in ring order
};

/// Division by a single divisor: g = q * divisor + r with no term of r
/// divisible by the divisor's leading term. Free-ring computation.
std::pair<Poly, Poly> divmod_single(const Poly& g, const Poly& divisor);

/// Canonical quotient representative (identity on free rings).
Poly normal_form(const Poly& g);

/// Formal partial derivative followed by normal_form.
Poly derive_partial(const Poly& g, std::size_t var);
Poly derive_partial(const Poly& g, std::string_view var_name);

/// Substitutes images[i] for variable i of g's ring; the result lives in
/// the images' (common) ring. Not reduced.
Poly substitute(const Poly& g, const std::vector<Poly>& images);

/// Determinant of a square polynomial matrix (cofactor expansion, exact).
Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m,
                     const RingPtr& ring);

/// Determinant of (d F_i / d x_j), exact; free rings only.
Poly jacobian_det(const std::vector<Poly>& fs);

/// Reinterprets a quotient-ring polynomial as its free-twin representative.
Poly lift_to_free(const Poly& g);
/// Reduces a free-twin polynomial into the quotient ring.
Poly project_to_quotient(const Poly& g_free, const RingPtr& quotient);

}  // namespace lnd

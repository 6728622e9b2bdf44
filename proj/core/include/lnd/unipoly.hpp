#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lnd/poly.hpp"
#include "lnd/rat.hpp"

namespace lnd {

/// Dense univariate polynomial over Q (ascending coefficients, no trailing
/// zeros). Used for the q_i generators of the preslice ideals and for the
/// degenerate-fiber analysis.
class UniPoly {
public:
  UniPoly() = default;
  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(Rat c);
  static UniPoly from_coefficients(std::vector<Rat> ascending);
  static UniPoly variable();  // t

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rat coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
  }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  const Rat& leading_coefficient() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const = default;

  /// Quotient and remainder; exact over Q.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  Rat evaluate(const Rat& x) const;

  std::string to_string(const std::string& var = "t") const;

private:
  std::vector<Rat> coeffs_;
  void trim();
};

/// Monic gcd (zero when both inputs are zero).
UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);

/// Yun's squarefree decomposition: pairwise-coprime monic squarefree
/// factors with multiplicities, product = input / leading coefficient.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(
    const UniPoly& p);

/// All rational roots with multiplicities (rational-root theorem), exact.
std::vector<std::pair<Rat, unsigned>> rational_roots(const UniPoly& p);

/// q(f) as an element of f's ring, reduced.
Poly unipoly_at(const UniPoly& q, const Poly& f);

}  // namespace lnd

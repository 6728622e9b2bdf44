#include "lnd/unipoly.hpp"

#include <algorithm>

#include "lnd/errors.hpp"

namespace lnd {

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Rat c) {
  UniPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

UniPoly UniPoly::from_coefficients(std::vector<Rat> ascending) {
  UniPoly p;
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

UniPoly UniPoly::variable() {
  UniPoly p;
  p.coeffs_ = {Rat(0), Rat(1)};
  return p;
}

const Rat& UniPoly::leading_coefficient() const {
  if (coeffs_.empty())
    throw UsageError("unipoly", "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly out;
  out.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out.coeffs_[i] += o.coeffs_[i];
  out.trim();
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  UniPoly out;
  out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  out.trim();
  return out;
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  UniPoly out = *this;
  for (Rat& c : out.coeffs_) c *= s;
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw UsageError("unipoly", "division by zero");
  UniPoly rem = *this;
  UniPoly quo;
  const int d = divisor.degree();
  if (rem.degree() >= d)
    quo.coeffs_.assign(rem.degree() - d + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= d) {
    const int k = rem.degree() - d;
    Rat factor = rem.leading_coefficient() / divisor.leading_coefficient();
    quo.coeffs_[k] = factor;
    for (int i = 0; i <= d; ++i)
      rem.coeffs_[i + k] -= factor * divisor.coeffs_[i];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

UniPoly UniPoly::derivative() const {
  UniPoly out;
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_[i - 1] = coeffs_[i] * Rat(static_cast<unsigned long>(i));
  out.trim();
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading_coefficient());
}

Rat UniPoly::evaluate(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat a = c < 0 ? Rat(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += rat_to_string(a);
    } else {
      std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
      out += (a == 1) ? mono : rat_to_string(a) + "*" + mono;
    }
  }
  return out;
}

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(
    const UniPoly& p) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (p.is_zero()) throw UsageError("unipoly", "squarefree of zero");
  UniPoly g = p.monic();
  if (g.degree() == 0) return out;

  // Yun's algorithm over a characteristic-0 field.
  UniPoly dg = g.derivative();
  UniPoly a0 = unipoly_gcd(g, dg);
  UniPoly b = g.divmod(a0).first;
  UniPoly c = dg.divmod(a0).first;
  UniPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    UniPoly a = unipoly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

std::vector<Int> positive_divisors(const Int& n_in) {
  Int n = n_in < 0 ? Int(-n_in) : n_in;
  std::vector<Int> divs;
  if (n == 0) return divs;
  for (Int d(1); d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      divs.push_back(d);
      Int other = n / d;
      if (other != d) divs.push_back(other);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<std::pair<Rat, unsigned>> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw UsageError("unipoly", "rational roots of zero");
  std::vector<std::pair<Rat, unsigned>> out;
  UniPoly f = p;

  // Strip the root at zero first.
  unsigned zero_mult = 0;
  while (!f.is_zero() && f.coefficient(0) == 0) {
    std::vector<Rat> shifted(f.coefficients().begin() + 1,
                             f.coefficients().end());
    f = UniPoly::from_coefficients(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult) out.emplace_back(Rat(0), zero_mult);
  if (f.degree() < 1) return out;

  // Clear denominators to a primitive integer polynomial.
  Int lcm(1);
  for (const Rat& c : f.coefficients()) {
    const Int& den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> ic;
  for (const Rat& c : f.coefficients()) {
    Rat scaled = c * Rat(lcm);
    ic.push_back(scaled.get_num());
  }

  std::vector<Int> ps = positive_divisors(ic.front());
  std::vector<Int> qs = positive_divisors(ic.back());
  for (const Int& num : ps) {
    for (const Int& den : qs) {
      for (int sign : {1, -1}) {
        Rat candidate(sign * num, den);
        candidate.canonicalize();
        if (candidate.get_num() != sign * num || candidate.get_den() != den)
          continue;  // non-reduced duplicate of another candidate
        unsigned mult = 0;
        while (!f.is_constant() && f.evaluate(candidate) == 0) {
          UniPoly linear =
              UniPoly::from_coefficients({-candidate, Rat(1)});
          f = f.divmod(linear).first;
          ++mult;
        }
        if (mult) out.emplace_back(candidate, mult);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Poly unipoly_at(const UniPoly& q, const Poly& f) {
  Poly acc(f.ring());
  Poly power = Poly::constant(f.ring(), Rat(1));
  for (std::size_t k = 0; k < q.coefficients().size(); ++k) {
    if (k) power = normal_form(power * f);
    if (q.coefficient(k) != 0) acc += power * q.coefficient(k);
  }
  return normal_form(acc);
}

}  // namespace lnd

#include "lnd/mono.hpp"

#include <stdexcept>

namespace lnd {

std::string_view order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::GrLex: return "grlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::GrevLex: return "grevlex";
  }
  return "?";
}

std::optional<MonomialOrder> order_from_name(std::string_view name) {
  if (name == "grlex") return MonomialOrder::GrLex;
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "grevlex") return MonomialOrder::GrevLex;
  return std::nullopt;
}

unsigned Mono::degree() const {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

bool Mono::is_one() const {
  for (unsigned e : exps_)
    if (e != 0) return false;
  return true;
}

Mono Mono::operator*(const Mono& other) const {
  if (nvars() != other.nvars())
    throw std::invalid_argument("Mono: variable count mismatch");
  Mono out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool Mono::divides(const Mono& other) const {
  if (nvars() != other.nvars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Mono Mono::quotient_of(const Mono& other) const {
  if (!divides(other))
    throw std::invalid_argument("Mono: quotient of non-multiple");
  Mono out(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
  return out;
}

int compare(const Mono& a, const Mono& b, MonomialOrder order) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("Mono compare: variable count mismatch");
  auto lex = [&]() -> int {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    }
    return 0;
  };
  switch (order) {
    case MonomialOrder::Lex:
      return lex();
    case MonomialOrder::GrLex: {
      unsigned da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      return lex();
    }
    case MonomialOrder::GrevLex: {
      unsigned da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      // Ties: larger monomial has the smaller exponent at the last
      // variable where they differ.
      for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

std::size_t MonoHash::operator()(const Mono& m) const {
  std::size_t h = 1469598103934665603ull;
  for (unsigned e : m.exps()) {
    h ^= e + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace lnd

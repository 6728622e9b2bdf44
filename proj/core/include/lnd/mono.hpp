#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lnd {

enum class MonomialOrder { GrLex, Lex, GrevLex };

std::string_view order_name(MonomialOrder order);
std::optional<MonomialOrder> order_from_name(std::string_view name);

/// Exponent vector, one entry per ring variable (earlier variables have
/// higher precedence in every order).
class Mono {
public:
  Mono() = default;
  explicit Mono(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Mono(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  unsigned exp(std::size_t i) const { return exps_[i]; }
  unsigned& exp(std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exps() const { return exps_; }

  unsigned degree() const;
  bool is_one() const;

  Mono operator*(const Mono& other) const;
  /// True when this monomial divides `other` componentwise.
  bool divides(const Mono& other) const;
  /// other / this; requires divides(other).
  Mono quotient_of(const Mono& other) const;

  bool operator==(const Mono& other) const = default;

private:
  std::vector<unsigned> exps_;
};

/// Three-way comparison under the given order: negative when a < b,
/// zero when equal, positive when a > b.
int compare(const Mono& a, const Mono& b, MonomialOrder order);

struct MonoHash {
  std::size_t operator()(const Mono& m) const;
};

}  // namespace lnd

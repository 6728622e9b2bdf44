#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lnd/mono.hpp"

namespace lnd {

class Poly;
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ambient ring Q[vars], optionally modulo a single defining relation P
/// (hypersurface quotient). Immutable; shared by the values living in it.
class Ring : public std::enable_shared_from_this<Ring> {
public:
  static RingPtr free_ring(std::vector<std::string> variables,
                           MonomialOrder order = MonomialOrder::GrLex);

  /// Quotient of `base` (a free ring) by its nonconstant relation; the
  /// relation is rescaled to be monic in its leading term.
  static RingPtr quotient_ring(const RingPtr& base, const Poly& relation);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const std::string& variable_name(std::size_t i) const {
    return variables_[i];
  }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  MonomialOrder order() const { return order_; }
  bool has_relation() const { return relation_ != nullptr; }
  /// The defining relation as a polynomial of the free twin ring.
  const Poly& relation() const;
  /// The free ring on the same variables and order (this ring, when free).
  RingPtr free_twin() const;

  bool same_ring(const Ring& other) const;
  std::string description() const;  // e.g. "Q[X,Y,Z]/(X^2*Y+X+Z^2+T^3)"

private:
  Ring(std::vector<std::string> variables, MonomialOrder order);

  std::vector<std::string> variables_;
  MonomialOrder order_;
  std::shared_ptr<const Poly> relation_;
  RingPtr free_twin_;
};

/// Shared-pointer-aware equality used by every cross-value operation.
bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace lnd

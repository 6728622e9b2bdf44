#include "lnd/ring.hpp"

#include <set>

#include "lnd/errors.hpp"
#include "lnd/poly.hpp"

namespace lnd {

Ring::Ring(std::vector<std::string> variables, MonomialOrder order)
    : variables_(std::move(variables)), order_(order) {}

RingPtr Ring::free_ring(std::vector<std::string> variables,
                        MonomialOrder order) {
  if (variables.empty())
    throw UsageError("ring", "a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw UsageError("ring", "empty variable name");
    if (!seen.insert(v).second)
      throw UsageError("ring", "duplicate variable name \"" + v + "\"");
  }
  return RingPtr(new Ring(std::move(variables), order));
}

RingPtr Ring::quotient_ring(const RingPtr& base, const Poly& relation) {
  if (!base) throw UsageError("ring", "null base ring");
  if (base->has_relation())
    throw UsageError("ring",
                     "only a single defining relation is supported; the base "
                     "ring already has one");
  if (!::lnd::same_ring(relation.ring(), base))
    throw UsageError("ring", "relation does not live in the base ring");
  if (relation.is_zero() || relation.is_constant())
    throw UsageError("ring", "relation must be nonconstant");

  // Rescale so the relation is monic in its leading term; the principal
  // ideal is unchanged.
  Poly monic = relation / relation.leading_term().coeff;

  Ring* r = new Ring(base->variables(), base->order());
  r->free_twin_ = base;
  RingPtr out(r);
  r->relation_ = std::make_shared<const Poly>(std::move(monic));
  return out;
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

const Poly& Ring::relation() const {
  if (!relation_) throw UsageError("ring", "ring has no relation");
  return *relation_;
}

RingPtr Ring::free_twin() const {
  if (!has_relation()) return shared_from_this();
  return free_twin_;
}

bool Ring::same_ring(const Ring& other) const {
  if (this == &other) return true;
  if (variables_ != other.variables_ || order_ != other.order_) return false;
  if (has_relation() != other.has_relation()) return false;
  if (!has_relation()) return true;
  return relation().terms().size() == other.relation().terms().size() &&
         relation() == other.relation();
}

std::string Ring::description() const {
  std::string out = "Q[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ",";
    out += variables_[i];
  }
  out += "]";
  if (has_relation()) out += "/(" + relation().to_string() + ")";
  return out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_ring(*b);
}

}  // namespace lnd

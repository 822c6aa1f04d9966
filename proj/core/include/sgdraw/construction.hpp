#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/order_conditions.hpp"

#include <optional>
#include <stdexcept>

namespace sgdraw {

// construct_drawing was handed an ordering that fails conditions (i)/(ii).
class ConditionsNotMet : public std::logic_error {
 public:
  explicit ConditionsNotMet(const ConditionViolation& v);
  const ConditionViolation& violation() const { return violation_; }

 private:
  ConditionViolation violation_;
};

// The ordering passes (i)/(ii) but no strictly increasing placement satisfies
// every vertex's two-sided bound. This happens for some non-complete graphs.
class UnrealizableOrdering : public std::runtime_error {
 public:
  UnrealizableOrdering();
};

// Left-to-right greedy: every vertex goes to the midpoint of its open
// interval of admissible positions (lower bound + 1 when unbounded above).
// None when some interval turns out empty. Requires passing conditions.
std::optional<Drawing> midpoint_construction(const OrderContext& ctx);

// Integer placement for complete graphs: positive pairs end up within a
// threshold K, negative pairs beyond it. None when the system has no
// solution (or the graph is not complete).
std::optional<Drawing> threshold_construction(const OrderContext& ctx);

// Exact decision: a valid drawing whose left-to-right order is ctx's
// ordering, or none if there is no such drawing (including when the
// ordering fails the conditions).
std::optional<Drawing> realize_ordering(const OrderContext& ctx);

// Throws ConditionsNotMet or UnrealizableOrdering.
Drawing construct_drawing(const OrderContext& ctx);

}  // namespace sgdraw

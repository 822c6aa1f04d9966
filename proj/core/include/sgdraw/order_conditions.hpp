#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/signed_graph.hpp"

#include <optional>
#include <vector>

namespace sgdraw {

// A graph paired with a left-to-right ordering. Holds a reference to the
// graph, which must outlive the context.
class OrderContext {
 public:
  OrderContext(const SignedGraph& g, VertexOrdering ordering);

  const SignedGraph& graph() const { return *graph_; }
  const VertexOrdering& ordering() const { return ordering_; }
  int size() const { return ordering_.size(); }
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
  Vertex at(int rank) const { return ordering_.at(rank); }

  // p_ij in {-1, 0, +1}, with p_ii = +1.
  int incidence(Vertex i, Vertex j) const;

 private:
  const SignedGraph* graph_;
  VertexOrdering ordering_;
  std::vector<int> rank_;
};

enum class Side { kLeft, kRight };

// Vertex i has negative neighbour j and, on the same side, a positive
// neighbour j_prime lying strictly farther away than j.
struct ConditionViolation {
  Vertex i = 0;
  Vertex j = 0;
  Vertex j_prime = 0;
  Side side = Side::kLeft;

  friend bool operator==(const ConditionViolation&,
                         const ConditionViolation&) = default;
};

// None when every vertex passes; otherwise the smallest (i, j, j_prime) by
// vertex id.
std::optional<ConditionViolation> conditions_check(const OrderContext& ctx);

inline constexpr int kLeftSentinel = -1;

// Ranks of the closest left negative, farthest left positive, farthest right
// positive and closest right negative neighbour. Missing negatives map to the
// sentinels -1 and n; missing positives map to i's own rank.
struct ExtremalNeighbors {
  int l_minus = kLeftSentinel;
  int l_plus = 0;
  int r_plus = 0;
  int r_minus = 0;

  friend bool operator==(const ExtremalNeighbors&,
                         const ExtremalNeighbors&) = default;
};

ExtremalNeighbors extremal_neighbors(const OrderContext& ctx, Vertex i);
// Indexed by rank.
std::vector<ExtremalNeighbors> extremal_table(const OrderContext& ctx);

}  // namespace sgdraw

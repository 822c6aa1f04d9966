#include "sgdraw/order_conditions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sgdraw {

OrderContext::OrderContext(const SignedGraph& g, VertexOrdering ordering)
    : graph_(&g), ordering_(std::move(ordering)), rank_(ordering_.ranks()) {
  if (ordering_.size() != g.num_vertices()) {
    throw std::invalid_argument("ordering does not cover the graph");
  }
}

int OrderContext::incidence(Vertex i, Vertex j) const {
  if (i == j) return 1;
  return static_cast<int>(graph_->sign(i, j));
}

namespace {

struct SideExtremes {
  int far_pos_left;   // smallest rank of a left positive, or INT_MAX
  int near_neg_left;  // largest rank of a left negative, or -1
  int far_pos_right;  // largest rank of a right positive, or -1
  int near_neg_right; // smallest rank of a right negative, or INT_MAX
};

SideExtremes side_extremes(const OrderContext& ctx, Vertex i) {
  constexpr int kBig = std::numeric_limits<int>::max();
  SideExtremes s{kBig, -1, -1, kBig};
  const int ri = ctx.rank(i);
  for (const Neighbor& nb : ctx.graph().neighbors(i)) {
    int r = ctx.rank(nb.vertex);
    if (nb.sign == Sign::kPositive) {
      if (r < ri) s.far_pos_left = std::min(s.far_pos_left, r);
      else s.far_pos_right = std::max(s.far_pos_right, r);
    } else {
      if (r < ri) s.near_neg_left = std::max(s.near_neg_left, r);
      else s.near_neg_right = std::min(s.near_neg_right, r);
    }
  }
  return s;
}

}  // namespace

std::optional<ConditionViolation> conditions_check(const OrderContext& ctx) {
  const SignedGraph& g = ctx.graph();
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    SideExtremes s = side_extremes(ctx, i);
    bool left_bad = s.far_pos_left < s.near_neg_left;
    bool right_bad = s.far_pos_right > s.near_neg_right;
    if (!left_bad && !right_bad) continue;

    const int ri = ctx.rank(i);
    // smallest negative j that has a positive beyond it on its side
    for (const Neighbor& nj : g.neighbors(i)) {
      if (nj.sign != Sign::kNegative) continue;
      int rj = ctx.rank(nj.vertex);
      bool left = rj < ri;
      if (left ? !(s.far_pos_left < rj) : !(s.far_pos_right > rj)) continue;
      for (const Neighbor& np : g.neighbors(i)) {
        if (np.sign != Sign::kPositive) continue;
        int rp = ctx.rank(np.vertex);
        if (left ? rp < rj : rp > rj) {
          return ConditionViolation{i, nj.vertex, np.vertex,
                                    left ? Side::kLeft : Side::kRight};
        }
      }
    }
  }
  return std::nullopt;
}

ExtremalNeighbors extremal_neighbors(const OrderContext& ctx, Vertex i) {
  SideExtremes s = side_extremes(ctx, i);
  const int ri = ctx.rank(i);
  ExtremalNeighbors e;
  e.l_minus = s.near_neg_left;
  e.l_plus = std::min(s.far_pos_left, ri);
  e.r_plus = std::max(s.far_pos_right, ri);
  e.r_minus = std::min(s.near_neg_right, ctx.size());
  return e;
}

std::vector<ExtremalNeighbors> extremal_table(const OrderContext& ctx) {
  std::vector<ExtremalNeighbors> table(static_cast<std::size_t>(ctx.size()));
  for (int r = 0; r < ctx.size(); ++r) {
    table[r] = extremal_neighbors(ctx, ctx.at(r));
  }
  return table;
}

}  // namespace sgdraw

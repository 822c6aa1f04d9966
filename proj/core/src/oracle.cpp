#include "sgdraw/oracle.hpp"

#include "sgdraw/construction.hpp"
#include "sgdraw/order_conditions.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace sgdraw {

int default_oracle_max_vertices() {
  if (const char* env = std::getenv("SGDRAW_ORACLE_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) {
      return static_cast<int>(v);
    }
  }
  return 10;
}

OracleTooLarge::OracleTooLarge(int n, int bound)
    : std::invalid_argument("oracle refuses " + std::to_string(n) +
                            " vertices (bound " + std::to_string(bound) +
                            "); pass an explicit limit to override") {}

SearchLimitExceeded::SearchLimitExceeded(std::uint64_t limit)
    : std::runtime_error("oracle search exceeded " + std::to_string(limit) +
                         " nodes") {}

namespace {

std::uint64_t saturating_factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

void saturating_add(std::uint64_t& acc, std::uint64_t x) {
  acc = x > std::numeric_limits<std::uint64_t>::max() - acc
            ? std::numeric_limits<std::uint64_t>::max()
            : acc + x;
}

// Depth-first search over prefixes. A violating triple is reported as soon
// as its rightmost vertex is placed, so a pruned prefix has no passing
// completion.
class Search {
 public:
  Search(const SignedGraph& g, const OracleOptions& options,
         const std::function<bool(std::span<const Vertex>)>& visit)
      : g_(g),
        n_(g.num_vertices()),
        visit_(visit),
        limit_(options.limit),
        rank_(static_cast<std::size_t>(n_), -1),
        right_negatives_(static_cast<std::size_t>(n_), 0),
        factorial_(static_cast<std::size_t>(n_) + 1) {
    for (int k = 0; k <= n_; ++k) factorial_[k] = saturating_factorial(k);
    order_.reserve(static_cast<std::size_t>(n_));
  }

  EnumerationStats run() {
    descend();
    return stats_;
  }

 private:
  // True when placing v at the next rank creates no violation.
  bool admissible(Vertex v) const {
    int far_pos_left = std::numeric_limits<int>::max();
    int near_neg_left = -1;
    for (const Neighbor& nb : g_.neighbors(v)) {
      int r = rank_[nb.vertex];
      if (r < 0) continue;
      if (nb.sign == Sign::kPositive) {
        // v lands right of a placed negative of nb: nb's right side breaks
        if (right_negatives_[nb.vertex] > 0) return false;
        far_pos_left = std::min(far_pos_left, r);
      } else {
        near_neg_left = std::max(near_neg_left, r);
      }
    }
    return far_pos_left > near_neg_left;
  }

  void place(Vertex v) {
    rank_[v] = static_cast<int>(order_.size());
    order_.push_back(v);
    for (const Neighbor& nb : g_.neighbors(v)) {
      if (nb.sign == Sign::kNegative && rank_[nb.vertex] >= 0 &&
          nb.vertex != v) {
        ++right_negatives_[nb.vertex];
      }
    }
  }

  void unplace(Vertex v) {
    for (const Neighbor& nb : g_.neighbors(v)) {
      if (nb.sign == Sign::kNegative && rank_[nb.vertex] >= 0 &&
          rank_[nb.vertex] < rank_[v]) {
        --right_negatives_[nb.vertex];
      }
    }
    order_.pop_back();
    rank_[v] = -1;
  }

  // Returns false once the visitor asks to stop.
  bool descend() {
    const int depth = static_cast<int>(order_.size());
    if (depth == n_) {
      saturating_add(stats_.orderings_tested, 1);
      if (n_ > 0 && order_.front() > order_.back()) return true;
      if (!visit_(order_)) {
        stats_.stopped = true;
        return false;
      }
      return true;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (rank_[v] >= 0) continue;
      ++stats_.nodes;
      if (limit_ && stats_.nodes > *limit_) throw SearchLimitExceeded(*limit_);
      if (!admissible(v)) {
        saturating_add(stats_.orderings_tested, factorial_[n_ - depth - 1]);
        continue;
      }
      place(v);
      bool go_on = descend();
      unplace(v);
      if (!go_on) return false;
    }
    return true;
  }

  const SignedGraph& g_;
  int n_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::optional<std::uint64_t> limit_;
  std::vector<int> rank_;
  std::vector<int> right_negatives_;
  std::vector<std::uint64_t> factorial_;
  std::vector<Vertex> order_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats for_each_passing_ordering(
    const SignedGraph& g,
    const std::function<bool(std::span<const Vertex>)>& visit,
    const OracleOptions& options) {
  if (!options.limit && g.num_vertices() > options.max_vertices) {
    throw OracleTooLarge(g.num_vertices(), options.max_vertices);
  }
  return Search(g, options, visit).run();
}

OracleResult decide_line_bruteforce(const SignedGraph& g,
                                    const OracleOptions& options) {
  OracleResult result;
  auto visit = [&](std::span<const Vertex> order) {
    VertexOrdering ordering(std::vector<Vertex>(order.begin(), order.end()));
    OrderContext ctx(g, ordering);
    if (auto d = realize_ordering(ctx)) {
      result.verdict = Verdict::kDrawable;
      result.ordering = std::move(ordering);
      result.drawing = std::move(d);
      return false;
    }
    return true;
  };
  EnumerationStats stats = for_each_passing_ordering(g, visit, options);
  result.orderings_tested = stats.orderings_tested;
  result.nodes = stats.nodes;
  return result;
}

}  // namespace sgdraw

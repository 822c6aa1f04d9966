#include "sgdraw/balance.hpp"

#include <stdexcept>

namespace sgdraw {

SimpleGraph positive_graph(const SignedGraph& g) {
  return SimpleGraph(g.num_vertices(), g.positive_edges());
}

std::optional<std::vector<int>> is_balanced(const SignedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(v)) {
        int want = nb.sign == Sign::kPositive ? side[v] : 1 - side[v];
        if (side[nb.vertex] == -1) {
          side[nb.vertex] = want;
          stack.push_back(nb.vertex);
        } else if (side[nb.vertex] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<Clustering> is_clusterizable(const SignedGraph& g) {
  std::vector<int> comp = positive_graph(g).connected_components();
  for (const Edge& e : g.negative_edges()) {
    if (comp[e.u] == comp[e.v]) return std::nullopt;
  }
  return Clustering(std::move(comp));
}

Drawing cluster_drawing(const SignedGraph& g, const Clustering& c) {
  const int n = g.num_vertices();
  if (c.size() != n) {
    throw std::invalid_argument("clustering size differs from vertex count");
  }
  for (const Edge& e : g.positive_edges()) {
    if (c.label(e.u) != c.label(e.v)) {
      throw std::invalid_argument("positive edge joins two clusters");
    }
  }
  for (const Edge& e : g.negative_edges()) {
    if (c.label(e.u) == c.label(e.v)) {
      throw std::invalid_argument("negative edge inside a cluster");
    }
  }

  std::vector<int> size(static_cast<std::size_t>(c.num_clusters()), 0);
  for (Vertex v = 0; v < n; ++v) ++size[c.label(v)];
  std::vector<int> seen(size.size(), 0);
  std::vector<Rational> pos(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    int l = c.label(v);
    Rational offset = size[l] > 1 ? make_rational(seen[l], size[l] - 1) : Rational(0);
    pos[v] = Rational(3 * l) + offset;
    ++seen[l];
  }
  return Drawing::line(std::move(pos));
}

}  // namespace sgdraw

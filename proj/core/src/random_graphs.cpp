#include "sgdraw/random_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace sgdraw {

SignedGraph random_complete(int n, double p_positive, Rng& rng) {
  return random_signed(n, 1.0, p_positive, rng);
}

SignedGraph random_unit_interval_complete(int n, Rng& rng) {
  std::uniform_int_distribution<int> place(0, std::max(1, 4 * n));
  std::uniform_int_distribution<int> reach(1, std::max(1, 2 * n));
  const int threshold = reach(rng);
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int& xi : x) xi = place(rng);
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<Edge> pos;
  std::vector<Edge> neg;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      (std::abs(x[a] - x[b]) <= threshold ? pos : neg).emplace_back(label[a], label[b]);
    }
  }
  return SignedGraph(n, std::move(pos), std::move(neg));
}

SignedGraph random_signed(int n, double p_edge, double p_positive, Rng& rng) {
  std::bernoulli_distribution edge(p_edge);
  std::bernoulli_distribution positive(p_positive);
  std::vector<Edge> pos;
  std::vector<Edge> neg;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!edge(rng)) continue;
      (positive(rng) ? pos : neg).emplace_back(a, b);
    }
  }
  return SignedGraph(n, std::move(pos), std::move(neg));
}

SignedGraph random_clusterizable(int n, int max_clusters, double p_edge,
                                 Rng& rng) {
  std::uniform_int_distribution<int> pick(0, std::max(0, max_clusters - 1));
  std::bernoulli_distribution edge(p_edge);
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int& l : label) l = pick(rng);
  std::vector<Edge> pos;
  std::vector<Edge> neg;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!edge(rng)) continue;
      (label[a] == label[b] ? pos : neg).emplace_back(a, b);
    }
  }
  return SignedGraph(n, std::move(pos), std::move(neg));
}

SignedGraph random_balanced(int n, double p_edge, Rng& rng) {
  return random_clusterizable(n, 2, p_edge, rng);
}

RandomChordal random_chordal(int n, double density, Rng& rng) {
  std::vector<Vertex> peo(static_cast<std::size_t>(n));
  std::iota(peo.begin(), peo.end(), 0);
  std::shuffle(peo.begin(), peo.end(), rng);

  std::bernoulli_distribution keep(density);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Edge> edges;
  std::vector<Vertex> present;
  for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
    Vertex v = *it;
    if (!present.empty() && keep(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, present.size() - 1);
      Vertex seed = present[pick(rng)];
      std::vector<Vertex> clique{seed};
      std::vector<Vertex> candidates;
      for (Vertex u : present) {
        if (adj[seed][u]) candidates.push_back(u);
      }
      std::shuffle(candidates.begin(), candidates.end(), rng);
      for (Vertex u : candidates) {
        bool fits = std::all_of(clique.begin(), clique.end(),
                                [&](Vertex c) { return adj[c][u] != 0; });
        if (fits && keep(rng)) clique.push_back(u);
      }
      for (Vertex u : clique) {
        adj[u][v] = adj[v][u] = 1;
        edges.emplace_back(u, v);
      }
    }
    present.push_back(v);
  }
  return RandomChordal{SimpleGraph(n, edges), std::move(peo)};
}

}  // namespace sgdraw

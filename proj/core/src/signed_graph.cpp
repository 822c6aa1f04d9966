#include "sgdraw/signed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sgdraw {
namespace {

void check_edges(int n, std::vector<Edge>& edges, const char* which) {
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument(std::string("self-loop in ") + which +
                                  " edges at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument(std::string("endpoint out of range in ") +
                                  which + " edges");
    }
    e = Edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw std::invalid_argument(std::string("duplicate ") + which + " edge " +
                                std::to_string(dup->u) + "-" +
                                std::to_string(dup->v));
  }
}

}  // namespace

SignedGraph::SignedGraph(int num_vertices)
    : SignedGraph(num_vertices, {}, {}) {}

SignedGraph::SignedGraph(int num_vertices, std::vector<Edge> positive,
                         std::vector<Edge> negative)
    : num_vertices_(num_vertices),
      positive_(std::move(positive)),
      negative_(std::move(negative)) {
  if (num_vertices_ < 0) throw std::invalid_argument("negative vertex count");
  check_edges(num_vertices_, positive_, "positive");
  check_edges(num_vertices_, negative_, "negative");

  std::vector<Edge> both;
  std::set_intersection(positive_.begin(), positive_.end(), negative_.begin(),
                        negative_.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw std::invalid_argument("pair " + std::to_string(both[0].u) + "-" +
                                std::to_string(both[0].v) +
                                " is both positive and negative");
  }

  adjacency_.assign(static_cast<std::size_t>(num_vertices_), {});
  for (const Edge& e : positive_) {
    adjacency_[e.u].push_back({e.v, Sign::kPositive});
    adjacency_[e.v].push_back({e.u, Sign::kPositive});
  }
  for (const Edge& e : negative_) {
    adjacency_[e.u].push_back({e.v, Sign::kNegative});
    adjacency_[e.v].push_back({e.u, Sign::kNegative});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) {
                return a.vertex < b.vertex;
              });
  }
}

std::vector<Vertex> SignedGraph::positive_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const Neighbor& nb : neighbors(v)) {
    if (nb.sign == Sign::kPositive) out.push_back(nb.vertex);
  }
  return out;
}

std::vector<Vertex> SignedGraph::negative_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const Neighbor& nb : neighbors(v)) {
    if (nb.sign == Sign::kNegative) out.push_back(nb.vertex);
  }
  return out;
}

Sign SignedGraph::sign(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
  if (it == list.end() || it->vertex != v) return Sign::kNone;
  return it->sign;
}

bool SignedGraph::is_complete() const {
  auto n = static_cast<std::size_t>(num_vertices_);
  return num_edges() == n * (n > 0 ? n - 1 : 0) / 2;
}

std::optional<Edge> SignedGraph::first_missing_pair() const {
  for (Vertex u = 0; u < num_vertices_; ++u) {
    Vertex expected = u + 1;
    for (const Neighbor& nb : neighbors(u)) {
      if (nb.vertex <= u) continue;
      if (nb.vertex != expected) return Edge(u, expected);
      ++expected;
    }
    if (expected < num_vertices_) return Edge(u, expected);
  }
  return std::nullopt;
}

SignedGraph induced_subgraph(const SignedGraph& g,
                             std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= g.num_vertices()) {
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    }
    if (index[v] != -1) {
      throw std::invalid_argument("induced_subgraph: repeated vertex");
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> pos;
  std::vector<Edge> neg;
  for (const Edge& e : g.positive_edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) pos.emplace_back(index[e.u], index[e.v]);
  }
  for (const Edge& e : g.negative_edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) neg.emplace_back(index[e.u], index[e.v]);
  }
  return SignedGraph(static_cast<int>(vertices.size()), std::move(pos),
                     std::move(neg));
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> permutation) {
  if (static_cast<int>(permutation.size()) != g.num_vertices()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<Edge> pos;
  std::vector<Edge> neg;
  for (const Edge& e : g.positive_edges()) pos.emplace_back(permutation[e.u], permutation[e.v]);
  for (const Edge& e : g.negative_edges()) neg.emplace_back(permutation[e.u], permutation[e.v]);
  return SignedGraph(g.num_vertices(), std::move(pos), std::move(neg));
}

SimpleGraph::SimpleGraph(int num_vertices)
    : adjacency_(static_cast<std::size_t>(num_vertices)) {}

SimpleGraph::SimpleGraph(int num_vertices, std::span<const Edge> edges)
    : SimpleGraph(num_vertices) {
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= num_vertices ||
        e.v >= num_vertices) {
      throw std::invalid_argument("SimpleGraph: bad edge");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    // sorted edge input already yields sorted lists
    if (!std::is_sorted(list.begin(), list.end())) std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("SimpleGraph: duplicate edge");
    }
  }
  num_edges_ = edges.size();
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> SimpleGraph::connected_components(int* count) const {
  const int n = num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

}  // namespace sgdraw

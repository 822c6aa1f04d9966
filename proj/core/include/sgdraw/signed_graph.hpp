#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sgdraw {

using Vertex = int;

enum class Sign : std::int8_t { kNegative = -1, kNone = 0, kPositive = 1 };

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  Sign sign = Sign::kNone;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Graph with a bipartition E = E+ (+) E- of its edge set. Vertices are the
// dense indices 0..n-1. Immutable once built; the constructor rejects
// self-loops, out-of-range endpoints, repeated pairs and pairs carrying both
// signs.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int num_vertices);
  SignedGraph(int num_vertices, std::vector<Edge> positive,
              std::vector<Edge> negative);

  int num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const {
    return positive_.size() + negative_.size();
  }

  // Sorted, canonical (u < v).
  std::span<const Edge> positive_edges() const { return positive_; }
  std::span<const Edge> negative_edges() const { return negative_; }

  // Neighbours of v sorted by vertex index.
  std::span<const Neighbor> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
  }

  std::vector<Vertex> positive_neighbors(Vertex v) const;
  std::vector<Vertex> negative_neighbors(Vertex v) const;

  Sign sign(Vertex u, Vertex v) const;

  // Every pair of distinct vertices carries exactly one signed edge.
  bool is_complete() const;
  // Lexicographically smallest pair without an edge, if any.
  std::optional<Edge> first_missing_pair() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.positive_ == b.positive_ &&
           a.negative_ == b.negative_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> positive_;
  std::vector<Edge> negative_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Induced signed subgraph on `vertices`; vertex vertices[i] becomes i.
SignedGraph induced_subgraph(const SignedGraph& g,
                             std::span<const Vertex> vertices);

// Same graph with vertex v renamed to permutation[v].
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> permutation);

// Plain undirected graph (used for G+).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int num_vertices);
  SimpleGraph(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  // Component index per vertex, numbered by smallest member.
  std::vector<int> connected_components(int* count = nullptr) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

}  // namespace sgdraw

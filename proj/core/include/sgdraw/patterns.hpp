#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/oracle.hpp"
#include "sgdraw/signed_graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgdraw {

enum class PatternKind {
  kF1,
  kF2,
  kF3,
  kF4,
  kNegativeTriangle,
  kNegativeCluster,
  kCycleTypeK,
};

struct PatternId {
  PatternKind kind = PatternKind::kF1;
  int n = 0;
  int k = 0;

  static PatternId f1(int n, int k) { return {PatternKind::kF1, n, k}; }
  static PatternId f2(int n) { return {PatternKind::kF2, n, 0}; }
  static PatternId f3(int n) { return {PatternKind::kF3, n, 0}; }
  static PatternId f4(int n) { return {PatternKind::kF4, n, 0}; }
  static PatternId negative_triangle() {
    return {PatternKind::kNegativeTriangle, 0, 0};
  }
  static PatternId negative_cluster() {
    return {PatternKind::kNegativeCluster, 0, 0};
  }
  static PatternId cycle_type_k(int n, int k) {
    return {PatternKind::kCycleTypeK, n, k};
  }

  friend bool operator==(const PatternId&, const PatternId&) = default;
};

// Throws std::invalid_argument when the parameters are out of range.
void validate(const PatternId& p);

// "f1:n,k", "f2:n", "f3:n", "f4:n", "neg-triangle", "neg-cluster",
// "cycle-k:n,k". Throws std::invalid_argument on bad syntax or parameters.
PatternId parse_pattern(std::string_view text);
std::string to_string(const PatternId& p);

// Vertex layout:
//   F1(n,k), cycle-k: cycle 0..n-1, chords (i, i+k mod n)
//   F2(n): centre 0, negative cycle 1..n
//   F3(n), F4(n): cycle 0..n-1, vertex n+i matched to i
//   negative triangle: triangle 0,1,2 and pair 3,4 negative, rest positive
//   negative cluster: centre 0, negative K6 on 1..6
SignedGraph generate(const PatternId& p);

struct PatternMatch {
  // map[pattern vertex] = host vertex
  std::vector<Vertex> map;
};

// Induced, sign-exact occurrence of `pattern` in `host`.
std::optional<PatternMatch> find_induced(const SignedGraph& host,
                                         const SignedGraph& pattern);
std::optional<PatternMatch> find_induced(const SignedGraph& host,
                                         const PatternId& pattern);

// True iff every single-vertex deletion of g is drawable in the line.
// Throws std::invalid_argument when g itself is drawable.
bool verify_minimal_line(const SignedGraph& g,
                         const OracleOptions& options = {});

// Vertex-deleted subgraphs of the negative triangle and the negative
// cluster, each with its explicit plane drawing. Irrational coordinates are
// truncated to `digits` decimal digits.
struct PlaneFixture {
  std::string name;
  // Vertices of the parent graph kept, in the subgraph's vertex order.
  std::vector<Vertex> kept;
  SignedGraph graph;
  Drawing drawing;
};
std::vector<PlaneFixture> plane_fixtures(int digits = 60);

struct PlaneFixtureReport {
  struct Entry {
    std::string name;
    bool valid = false;
    // Same check with 30-digit coordinates.
    bool valid_coarse = false;
  };
  std::vector<Entry> entries;

  bool passed() const;
};
PlaneFixtureReport verify_minimal_plane_fixtures();

// `arms` lists a_{-k}, ..., a_{-1}, a_1, ..., a_k. True iff the subgraph
// induced on the arms and a0 is exactly the positive path a_{-k} .. a_k plus
// the negative chords (a_i, a_{i+k+1}) for -k <= i <= -1. Throws
// std::invalid_argument for an empty or odd-sized list, repeated vertices or
// out-of-range vertices.
bool verify_central_witness(const SignedGraph& g, Vertex a0,
                            std::span<const Vertex> arms);

// Floor of sqrt(x) to `digits` decimal places.
Rational sqrt_truncated(const Rational& x, int digits);

}  // namespace sgdraw

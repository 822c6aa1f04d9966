#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/signed_graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sgdraw {

// Lexicographic breadth-first search. Ties are broken by `priority` (earlier
// entries first); an empty priority means ascending vertex index. Returns the
// visit order.
std::vector<Vertex> lex_bfs(const SimpleGraph& h,
                            std::span<const Vertex> priority = {});

// LBFS+: ties go to the vertex visited last by `previous`.
std::vector<Vertex> lex_bfs_plus(const SimpleGraph& h,
                                 std::span<const Vertex> previous);

struct ChordalityResult {
  // Elimination order (reverse Lex-BFS) when chordal.
  std::optional<VertexOrdering> peo;
  // Otherwise a chordless cycle of length >= 4, listed along the cycle.
  std::vector<Vertex> cycle;

  bool chordal() const { return peo.has_value(); }
};

ChordalityResult is_chordal_with_peo(const SimpleGraph& h);

// Three Lex-BFS sweeps (LBFS, LBFS+, LBFS+). For a unit interval graph the
// result is an umbrella ordering: every closed neighbourhood is a contiguous
// block. Components come out contiguous, ordered by their smallest vertex.
std::vector<Vertex> unit_interval_ordering(const SimpleGraph& h);

}  // namespace sgdraw

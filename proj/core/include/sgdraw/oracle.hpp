#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/signed_graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

namespace sgdraw {

enum class Verdict { kDrawable, kNotDrawable };

// Vertex bound used when OracleOptions does not override it: 10, or the value
// of the SGDRAW_ORACLE_MAX_N environment variable when set.
int default_oracle_max_vertices();

struct OracleOptions {
  int max_vertices = default_oracle_max_vertices();
  // Maximum number of search nodes (ordering prefixes examined). Setting it
  // also lifts the vertex bound.
  std::optional<std::uint64_t> limit;
};

class OracleTooLarge : public std::invalid_argument {
 public:
  OracleTooLarge(int n, int bound);
};

class SearchLimitExceeded : public std::runtime_error {
 public:
  explicit SearchLimitExceeded(std::uint64_t limit);
};

struct OracleResult {
  Verdict verdict = Verdict::kNotDrawable;
  std::optional<VertexOrdering> ordering;
  std::optional<Drawing> drawing;
  // Orderings settled so far: pruned subtrees count in full, so an exhausted
  // search reports n!.
  std::uint64_t orderings_tested = 0;
  std::uint64_t nodes = 0;
};

// Visits, in lexicographic order, every ordering that passes conditions
// (i)/(ii) and has order.front() <= order.back() (reversals are equivalent).
// The visitor returns false to stop. Returns the same counters as the oracle.
struct EnumerationStats {
  std::uint64_t orderings_tested = 0;
  std::uint64_t nodes = 0;
  bool stopped = false;
};
EnumerationStats for_each_passing_ordering(
    const SignedGraph& g,
    const std::function<bool(std::span<const Vertex>)>& visit,
    const OracleOptions& options = {});

// Ground truth for the line: the lexicographically first passing ordering
// that a valid drawing realizes, or not-drawable after exhausting the search.
OracleResult decide_line_bruteforce(const SignedGraph& g,
                                    const OracleOptions& options = {});

}  // namespace sgdraw

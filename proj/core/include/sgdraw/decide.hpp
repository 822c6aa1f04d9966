#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/oracle.hpp"
#include "sgdraw/order_conditions.hpp"
#include "sgdraw/signed_graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace sgdraw {

struct Certificate {
  VertexOrdering ordering;
  Drawing drawing;
};

// Chordless cycle (length >= 4) of G+, listed along the cycle.
struct ChordlessCycle {
  std::vector<Vertex> vertices;
};

struct SearchExhausted {
  std::uint64_t orderings_tested = 0;
};

using Witness =
    std::variant<std::monostate, ChordlessCycle, ConditionViolation,
                 SearchExhausted>;

enum class Method { kCompletePipeline, kOracle };

struct DecisionResult {
  Verdict verdict = Verdict::kNotDrawable;
  Method method = Method::kCompletePipeline;
  std::optional<Certificate> certificate;
  Witness witness;

  bool drawable() const { return verdict == Verdict::kDrawable; }
};

class NotCompleteGraph : public std::invalid_argument {
 public:
  explicit NotCompleteGraph(Edge missing);
  Edge missing() const { return missing_; }

 private:
  Edge missing_;
};

// Line drawability of a complete signed graph in O(n^2). Graphs with at most
// four vertices go to the oracle. Throws NotCompleteGraph otherwise.
DecisionResult decide_complete(const SignedGraph& g);

// Oracle wrapped into a DecisionResult (SearchExhausted witness).
DecisionResult decide_with_oracle(const SignedGraph& g,
                                  const OracleOptions& options = {});

}  // namespace sgdraw

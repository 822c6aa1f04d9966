#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/signed_graph.hpp"

#include <optional>
#include <vector>

namespace sgdraw {

// Vertex i sees positive neighbour j no closer than negative neighbour k.
template <typename Scalar>
struct BasicViolation {
  Vertex i = 0;
  Vertex j = 0;
  Vertex k = 0;
  Scalar d2_positive{};
  Scalar d2_negative{};
};

template <typename Scalar>
struct BasicValidityReport {
  bool valid = true;
  // Pairs of distinct vertices mapped to the same point.
  std::vector<Edge> coincident;
  // Sorted by (i, j, k).
  std::vector<BasicViolation<Scalar>> violations;
};

using Violation = BasicViolation<Rational>;
using ValidityReport = BasicValidityReport<Rational>;
using FloatValidityReport = BasicValidityReport<double>;

template <typename Scalar>
Scalar squared_distance(const BasicDrawing<Scalar>& d, Vertex a, Vertex b);

// Strict comparison of squared distances; no tolerance in either mode.
// Throws std::invalid_argument when the drawing does not have exactly one
// point per vertex, or when expected_dim is given and differs from d.dim().
ValidityReport check_valid(const SignedGraph& g, const Drawing& d,
                           std::optional<int> expected_dim = std::nullopt);
FloatValidityReport check_valid(const SignedGraph& g, const FloatDrawing& d,
                                std::optional<int> expected_dim = std::nullopt);

bool is_valid(const SignedGraph& g, const Drawing& d);
bool is_valid(const SignedGraph& g, const FloatDrawing& d);

}  // namespace sgdraw

#pragma once

#include "sgdraw/drawing.hpp"
#include "sgdraw/signed_graph.hpp"

#include <optional>
#include <vector>

namespace sgdraw {

// Unsigned graph on E+ only.
SimpleGraph positive_graph(const SignedGraph& g);

// Side (0 or 1) per vertex such that positive edges stay inside a side and
// negative edges cross; none if no such split exists.
std::optional<std::vector<int>> is_balanced(const SignedGraph& g);

// Components of G+ as clusters, provided no negative edge lies inside one.
std::optional<Clustering> is_clusterizable(const SignedGraph& g);

// Cluster c occupies [3c, 3c + 1]; its members are spaced evenly in vertex
// order (a singleton sits at 3c). Throws std::invalid_argument when a
// positive edge crosses clusters or a negative edge stays inside one.
Drawing cluster_drawing(const SignedGraph& g, const Clustering& c);

}  // namespace sgdraw

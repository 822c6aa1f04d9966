#pragma once

#include "sgdraw/signed_graph.hpp"

#include <random>
#include <vector>

namespace sgdraw {

using Rng = std::mt19937_64;

// Every pair is an edge; positive with probability p_positive.
SignedGraph random_complete(int n, double p_positive, Rng& rng);

// Complete graph whose positive part is a unit interval graph (hence always
// line-drawable), with vertex labels shuffled.
SignedGraph random_unit_interval_complete(int n, Rng& rng);

// Each pair is an edge with probability p_edge, positive with p_positive.
SignedGraph random_signed(int n, double p_edge, double p_positive, Rng& rng);

// Random two-sided split; edges present with probability p_edge and signed
// by the split.
SignedGraph random_balanced(int n, double p_edge, Rng& rng);

// Random partition into up to max_clusters parts; edges present with
// probability p_edge, positive inside a part and negative across.
SignedGraph random_clusterizable(int n, int max_clusters, double p_edge,
                                 Rng& rng);

struct RandomChordal {
  SimpleGraph graph;
  // The elimination order the graph was grown from.
  std::vector<Vertex> peo;
};

// Grows a chordal graph by adding vertices in reverse elimination order,
// each attached to a random clique of the vertices already present.
RandomChordal random_chordal(int n, double density, Rng& rng);

}  // namespace sgdraw

#include "sgdraw/chordal.hpp"
#include "sgdraw/random_graphs.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace sgdraw;

namespace {

SimpleGraph make(int n, std::vector<Edge> edges) { return SimpleGraph(n, edges); }

std::vector<Vertex> peo_of(const ChordalityResult& r) {
  return std::vector<Vertex>(r.peo->order().begin(), r.peo->order().end());
}

// Every closed neighbourhood is a contiguous block of the ordering.
bool umbrella(const SimpleGraph& h, const std::vector<Vertex>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    int lo = pos[v];
    int hi = pos[v];
    for (Vertex u : h.neighbors(v)) {
      lo = std::min(lo, pos[u]);
      hi = std::max(hi, pos[u]);
    }
    if (hi - lo + 1 != static_cast<int>(h.neighbors(v).size()) + 1) return false;
  }
  return true;
}

// Lex-BFS order check via the four-point characterisation: if a < b < c,
// ac is an edge and ab is not, some d < a is adjacent to b but not to c.
bool is_lbfs_order(const SimpleGraph& h, const std::vector<Vertex>& s) {
  const int n = h.num_vertices();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (!h.adjacent(s[a], s[c]) || h.adjacent(s[a], s[b])) continue;
        bool found = false;
        for (int d = 0; d < a && !found; ++d) {
          found = h.adjacent(s[d], s[b]) && !h.adjacent(s[d], s[c]);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Chordality, FourCycleIsNotChordal) {
  SimpleGraph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto r = is_chordal_with_peo(c4);
  EXPECT_FALSE(r.chordal());
  EXPECT_EQ(r.cycle.size(), 4u);
  EXPECT_TRUE(ref::naive_is_chordless_cycle(c4, r.cycle));
}

TEST(Chordality, TreesAreChordalLeavesFirst) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 20;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
      edges.emplace_back(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    }
    SimpleGraph tree(n, edges);
    auto r = is_chordal_with_peo(tree);
    ASSERT_TRUE(r.chordal());
    auto peo = peo_of(r);
    EXPECT_TRUE(ref::naive_is_peo(tree, peo));
    if (n > 1) EXPECT_EQ(tree.neighbors(peo.front()).size(), 1u);
  }
}

TEST(Chordality, K4MinusAnEdge) {
  SimpleGraph g = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto r = is_chordal_with_peo(g);
  ASSERT_TRUE(r.chordal());
  EXPECT_TRUE(ref::naive_is_peo(g, peo_of(r)));
}

TEST(Chordality, IntervalGraphs) {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 15;
    std::vector<std::pair<int, int>> iv;
    std::uniform_int_distribution<int> at(0, 30);
    for (int i = 0; i < n; ++i) {
      int a = at(rng);
      int b = at(rng);
      iv.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) edges.emplace_back(i, j);
      }
    }
    SimpleGraph g(n, edges);
    auto r = is_chordal_with_peo(g);
    ASSERT_TRUE(r.chordal());
    EXPECT_TRUE(ref::naive_is_peo(g, peo_of(r)));
  }
}

TEST(Chordality, RandomChordalGraphsYieldVerifiedPeo) {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    auto rc = random_chordal(1 + t % 30, 0.6, rng);
    ASSERT_TRUE(ref::naive_is_peo(rc.graph, rc.peo));
    auto r = is_chordal_with_peo(rc.graph);
    ASSERT_TRUE(r.chordal());
    EXPECT_TRUE(ref::naive_is_peo(rc.graph, peo_of(r)));
  }
}

TEST(Chordality, NonChordalWitnessIsChordless) {
  Rng rng(13);
  int non_chordal = 0;
  for (int t = 0; t < 400; ++t) {
    int n = 4 + t % 12;
    std::bernoulli_distribution edge(0.3);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (edge(rng)) edges.emplace_back(a, b);
      }
    }
    SimpleGraph g(n, edges);
    auto r = is_chordal_with_peo(g);
    if (r.chordal()) {
      EXPECT_TRUE(ref::naive_is_peo(g, peo_of(r)));
    } else {
      ++non_chordal;
      EXPECT_TRUE(ref::naive_is_chordless_cycle(g, r.cycle)) << "trial " << t;
    }
  }
  EXPECT_GT(non_chordal, 50);
}

TEST(LexBfs, ProducesLexBfsOrders) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 12;
    std::bernoulli_distribution edge(0.4);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (edge(rng)) edges.emplace_back(a, b);
      }
    }
    SimpleGraph g(n, edges);
    auto s = lex_bfs(g);
    EXPECT_TRUE(is_lbfs_order(g, s));
    EXPECT_TRUE(is_lbfs_order(g, lex_bfs_plus(g, s)));
  }
}

TEST(LexBfs, TiesGoToLowestIndexThenToPriority) {
  SimpleGraph g = make(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(lex_bfs(g), (std::vector<Vertex>{0, 1, 2, 3}));
  std::vector<Vertex> prev{0, 1, 2, 3};
  // LBFS+ starts from the last vertex of the previous sweep
  EXPECT_EQ(lex_bfs_plus(g, prev), (std::vector<Vertex>{3, 0, 2, 1}));
  std::vector<Vertex> bad{0, 1};
  EXPECT_THROW(lex_bfs(g, bad), std::invalid_argument);
}

TEST(UnitIntervalOrdering, UmbrellaOnUnitIntervalGraphs) {
  Rng rng(34);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + t % 25;
    std::uniform_int_distribution<int> at(0, 3 * n);
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int& xi : x) xi = at(rng);
    int reach = 1 + t % 5;
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (std::abs(x[a] - x[b]) <= reach) edges.emplace_back(a, b);
      }
    }
    SimpleGraph g(n, edges);
    auto order = unit_interval_ordering(g);
    EXPECT_TRUE(umbrella(g, order)) << "trial " << t;
    // components contiguous, ordered by smallest member
    auto comp = g.connected_components();
    for (std::size_t i = 1; i < order.size(); ++i) EXPECT_LE(comp[order[i - 1]], comp[order[i]]);
  }
}

TEST(UnitIntervalOrdering, ClawHasNoUmbrella) {
  SimpleGraph claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(umbrella(claw, unit_interval_ordering(claw)));
}

#include "sgdraw/oracle.hpp"
#include "sgdraw/order_conditions.hpp"
#include "sgdraw/patterns.hpp"
#include "sgdraw/random_graphs.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

using namespace sgdraw;

TEST(Oracle, PositiveStarExhaustsAllOrderings) {
  OracleResult r = decide_line_bruteforce(generate(PatternId::f2(3)));
  EXPECT_EQ(r.verdict, Verdict::kNotDrawable);
  EXPECT_EQ(r.orderings_tested, 24u);
  EXPECT_FALSE(r.ordering);
}

TEST(Oracle, SingleEdgeDrawableOnFirstOrdering) {
  OracleResult r = decide_line_bruteforce(SignedGraph(2, {{0, 1}}, {}));
  ASSERT_EQ(r.verdict, Verdict::kDrawable);
  EXPECT_EQ(r.ordering->order()[0], 0);
  EXPECT_EQ(r.orderings_tested, 1u);
  EXPECT_TRUE(ref::naive_valid(SignedGraph(2, {{0, 1}}, {}), *r.drawing));
}

TEST(Oracle, EmptyGraph) {
  EXPECT_EQ(decide_line_bruteforce(SignedGraph(0)).verdict, Verdict::kDrawable);
}

// The pruned search visits exactly the passing orderings (front < back) that
// a plain permutation scan finds, in the same order.
TEST(Oracle, PrunedSearchMatchesPlainEnumeration) {
  Rng rng(77);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + t % 7;
    SignedGraph g = random_signed(n, 0.5 + 0.05 * (t % 8), 0.5, rng);
    std::vector<std::vector<Vertex>> plain;
    std::vector<Vertex> order = ref::iota_vertices(n);
    do {
      if (order.front() <= order.back() && !ref::naive_conditions(g, order)) {
        plain.push_back(order);
      }
    } while (std::next_permutation(order.begin(), order.end()));

    std::vector<std::vector<Vertex>> pruned;
    auto stats = for_each_passing_ordering(g, [&](std::span<const Vertex> o) {
      pruned.emplace_back(o.begin(), o.end());
      return true;
    });
    EXPECT_EQ(pruned, plain) << "trial " << t;
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
    EXPECT_EQ(stats.orderings_tested, fact);
  }
}

TEST(Oracle, CertificatesVerify) {
  Rng rng(78);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + t % 7;
    SignedGraph g = random_signed(n, 0.7, 0.6, rng);
    OracleResult r = decide_line_bruteforce(g);
    if (r.verdict != Verdict::kDrawable) continue;
    EXPECT_FALSE(ref::naive_conditions(
        g, std::vector<Vertex>(r.ordering->order().begin(), r.ordering->order().end())));
    EXPECT_TRUE(ref::naive_valid(g, *r.drawing));
  }
}

TEST(Oracle, GridDrawingsAreNeverMissed) {
  Rng rng(79);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 3 + t % 3;
    SignedGraph g = random_signed(n, 0.8, 0.5, rng);
    if (ref::grid_line_drawing(g, n + 3)) {
      ++found;
      EXPECT_EQ(decide_line_bruteforce(g).verdict, Verdict::kDrawable) << "trial " << t;
    }
  }
  EXPECT_GT(found, 50);
}

TEST(Oracle, DrawabilityIsHereditary) {
  Rng rng(80);
  for (int t = 0; t < 150; ++t) {
    int n = 3 + t % 6;
    SignedGraph g = random_signed(n, 0.6, 0.6, rng);
    if (decide_line_bruteforce(g).verdict != Verdict::kDrawable) continue;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Vertex> rest;
      for (Vertex u = 0; u < n; ++u) {
        if (u != v) rest.push_back(u);
      }
      EXPECT_EQ(decide_line_bruteforce(induced_subgraph(g, rest)).verdict, Verdict::kDrawable);
    }
  }
}

TEST(Oracle, VertexBound) {
  SignedGraph big(12);
  OracleOptions o;
  o.max_vertices = 10;
  EXPECT_THROW(decide_line_bruteforce(big, o), OracleTooLarge);
  o.limit = 1000;
  EXPECT_EQ(decide_line_bruteforce(big, o).verdict, Verdict::kDrawable);
}

TEST(Oracle, LimitCountsSearchNodes) {
  OracleOptions o;
  o.limit = 5;
  EXPECT_THROW(decide_line_bruteforce(generate(PatternId::f1(8, 3)), o), SearchLimitExceeded);
}

TEST(Oracle, EnvironmentOverridesBound) {
  ::setenv("SGDRAW_ORACLE_MAX_N", "4", 1);
  EXPECT_EQ(default_oracle_max_vertices(), 4);
  ::setenv("SGDRAW_ORACLE_MAX_N", "junk", 1);
  EXPECT_EQ(default_oracle_max_vertices(), 10);
  ::unsetenv("SGDRAW_ORACLE_MAX_N");
  EXPECT_EQ(default_oracle_max_vertices(), 10);
}

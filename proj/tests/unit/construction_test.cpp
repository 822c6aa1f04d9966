#include "sgdraw/construction.hpp"
#include "sgdraw/oracle.hpp"
#include "sgdraw/patterns.hpp"
#include "sgdraw/random_graphs.hpp"
#include "sgdraw/validity.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace sgdraw;

namespace {

OrderContext ctx_of(const SignedGraph& g, std::vector<Vertex> order) {
  return OrderContext(g, VertexOrdering(std::move(order)));
}

bool strictly_increasing(const OrderContext& ctx, const Drawing& d) {
  for (int r = 0; r + 1 < ctx.size(); ++r) {
    if (!(d.coordinate(ctx.at(r), 0) < d.coordinate(ctx.at(r + 1), 0))) return false;
  }
  return true;
}

}  // namespace

TEST(ConstructDrawing, PositiveEdge) {
  SignedGraph g(2, {{0, 1}}, {});
  auto ctx = ctx_of(g, {0, 1});
  Drawing d = construct_drawing(ctx);
  EXPECT_TRUE(strictly_increasing(ctx, d));
  EXPECT_TRUE(ref::naive_valid(g, d));
}

TEST(ConstructDrawing, PositiveThenNegative) {
  SignedGraph g(3, {{0, 1}}, {{1, 2}});
  auto ctx = ctx_of(g, {0, 1, 2});
  auto mid = midpoint_construction(ctx);
  ASSERT_TRUE(mid);
  EXPECT_EQ(*mid, Drawing::line({0, 1, 3}));
  EXPECT_TRUE(ref::naive_valid(g, construct_drawing(ctx)));
}

TEST(ConstructDrawing, StarWithOneCycleVertexRemoved) {
  for (int half = 2; half <= 5; ++half) {
    const int m = 2 * half - 1;
    SignedGraph star = generate(PatternId::f2(m));
    std::vector<Vertex> kept{0};
    for (int c = 1; c < m; ++c) kept.push_back(c);  // drop cycle vertex m
    SignedGraph g = induced_subgraph(star, kept);

    // centre at 0, path vertices alternate right / left
    std::vector<Rational> x(static_cast<std::size_t>(g.num_vertices()));
    for (int c = 1; c < m; ++c) x[c] = c % 2 ? Rational((c + 1) / 2) : Rational(-c / 2);
    Drawing layout = Drawing::line(x);
    EXPECT_TRUE(ref::naive_valid(g, layout)) << "m=" << m;

    std::vector<Vertex> order = ref::iota_vertices(g.num_vertices());
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] < x[b]; });
    auto ctx = ctx_of(g, order);
    ASSERT_FALSE(conditions_check(ctx));
    Drawing d = construct_drawing(ctx);
    EXPECT_TRUE(strictly_increasing(ctx, d));
    EXPECT_TRUE(ref::naive_valid(g, d));
  }
}

TEST(ConstructDrawing, AllPositiveCompleteGraphGetsConsecutiveIntegers) {
  std::vector<Edge> pos;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) pos.emplace_back(a, b);
  }
  SignedGraph g(6, pos, {});
  auto d = threshold_construction(ctx_of(g, {0, 1, 2, 3, 4, 5}));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, Drawing::line({0, 1, 2, 3, 4, 5}));
}

TEST(ConstructDrawing, RejectsOrderingThatFailsConditions) {
  SignedGraph g = generate(PatternId::f1(4, 2));
  try {
    construct_drawing(ctx_of(g, {0, 1, 2, 3}));
    FAIL() << "expected ConditionsNotMet";
  } catch (const ConditionsNotMet& e) {
    EXPECT_EQ(e.violation(), (ConditionViolation{0, 2, 3, Side::kRight}));
  }
  EXPECT_FALSE(realize_ordering(ctx_of(g, {0, 1, 2, 3})));
}

// Conditions (i)/(ii) hold, yet the two-sided bounds of vertices 1 and 6
// force u1 < u0.
TEST(ConstructDrawing, PassingOrderingWithoutDrawing) {
  SignedGraph g(7, {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 6}, {2, 4}},
                {{1, 5}, {2, 3}, {2, 5}, {2, 6}});
  auto ctx = ctx_of(g, {0, 5, 1, 3, 6, 2, 4});
  ASSERT_FALSE(conditions_check(ctx));
  EXPECT_FALSE(realize_ordering(ctx));
  EXPECT_THROW(construct_drawing(ctx), UnrealizableOrdering);

  // no integer placement on a wide grid realizes it either
  auto d = ref::grid_line_drawing(g, 9);
  if (d) {
    std::vector<Vertex> order = ref::iota_vertices(7);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return (*d)[a] < (*d)[b]; });
    std::vector<Vertex> rev(order.rbegin(), order.rend());
    std::vector<Vertex> bad{0, 5, 1, 3, 6, 2, 4};
    EXPECT_NE(order, bad);
    EXPECT_NE(rev, bad);
  }

  // the graph itself is drawable through another ordering
  OracleResult r = decide_line_bruteforce(g);
  ASSERT_EQ(r.verdict, Verdict::kDrawable);
  EXPECT_TRUE(ref::naive_valid(g, *r.drawing));
}

TEST(ConstructDrawing, CompleteGraphsPassingOrderingsAlwaysRealize) {
  Rng rng(41);
  int tested = 0;
  for (int t = 0; t < 400; ++t) {
    int n = 2 + t % 7;
    SignedGraph g = random_unit_interval_complete(n, rng);
    for_each_passing_ordering(g, [&](std::span<const Vertex> order) {
      auto ctx = ctx_of(g, std::vector<Vertex>(order.begin(), order.end()));
      Drawing d = construct_drawing(ctx);
      EXPECT_TRUE(strictly_increasing(ctx, d));
      EXPECT_TRUE(ref::naive_valid(g, d));
      ++tested;
      return tested % 5 != 0;
    });
  }
  EXPECT_GT(tested, 400);
}

TEST(RealizeOrdering, DrawingsFollowTheOrderAndVerify) {
  Rng rng(43);
  int realized = 0;
  for (int t = 0; t < 400; ++t) {
    int n = 2 + t % 7;
    SignedGraph g = random_signed(n, 0.6, 0.6, rng);
    for_each_passing_ordering(g, [&](std::span<const Vertex> order) {
      auto ctx = ctx_of(g, std::vector<Vertex>(order.begin(), order.end()));
      if (auto d = realize_ordering(ctx)) {
        EXPECT_TRUE(strictly_increasing(ctx, *d));
        EXPECT_TRUE(ref::naive_valid(g, *d));
        ++realized;
      }
      return false;
    });
  }
  EXPECT_GT(realized, 200);
}

TEST(RealizeOrdering, GridDrawingsImplyRealizableOrder) {
  // a drawing found by brute force certifies its own left-to-right order
  Rng rng(47);
  for (int t = 0; t < 150; ++t) {
    int n = 3 + t % 3;
    SignedGraph g = random_signed(n, 0.8, 0.5, rng);
    auto x = ref::grid_line_drawing(g, n + 3);
    if (!x) continue;
    std::vector<Vertex> order = ref::iota_vertices(n);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return (*x)[a] < (*x)[b]; });
    auto ctx = ctx_of(g, order);
    EXPECT_FALSE(conditions_check(ctx));
    EXPECT_TRUE(realize_ordering(ctx)) << "trial " << t;
  }
}

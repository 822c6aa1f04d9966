#include "sgdraw/patterns.hpp"
#include "sgdraw/random_graphs.hpp"
#include "sgdraw/validity.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace sgdraw;

namespace {

Drawing line(std::initializer_list<Rational> xs) { return Drawing::line(std::vector<Rational>(xs)); }

}  // namespace

TEST(CheckValid, AllNegativeGraphIsVacuouslyValid) {
  SignedGraph g(4, {}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto r = check_valid(g, line({5, -2, 7, 0}));
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.violations.empty());
}

TEST(CheckValid, NegativeTriangleMinusTriangleVertex) {
  SignedGraph triangle = generate(PatternId::negative_triangle());
  std::vector<Vertex> kept{1, 2, 3, 4};
  SignedGraph g = induced_subgraph(triangle, kept);
  Drawing d(2, {0, 0, 0, 1, Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(1, 2)});
  EXPECT_TRUE(check_valid(g, d).valid);
  EXPECT_TRUE(ref::naive_valid(g, d));
}

TEST(CheckValid, PositiveStarHasNoLineDrawingOnFourPoints) {
  SignedGraph g = generate(PatternId::f2(3));
  std::vector<int> perm{0, 1, 2, 3};
  int checked = 0;
  do {
    std::vector<Rational> xs(perm.begin(), perm.end());
    Drawing d = Drawing::line(xs);
    auto r = check_valid(g, d);
    EXPECT_FALSE(r.valid);
    EXPECT_FALSE(r.violations.empty());
    ++checked;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(checked, 24);
}

TEST(CheckValid, ReportsEveryViolation) {
  // 0 has positive 1 and 2, negative 3 sitting closest
  SignedGraph g(4, {{0, 1}, {0, 2}}, {{0, 3}});
  auto r = check_valid(g, line({0, 3, -4, 1}));
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].i, 0);
  EXPECT_EQ(r.violations[0].j, 1);
  EXPECT_EQ(r.violations[0].k, 3);
  EXPECT_EQ(r.violations[0].d2_positive, 9);
  EXPECT_EQ(r.violations[0].d2_negative, 1);
  EXPECT_EQ(r.violations[1].j, 2);
}

TEST(CheckValid, EqualDistancesAreViolations) {
  SignedGraph g(3, {{0, 1}}, {{0, 2}});
  EXPECT_FALSE(check_valid(g, line({0, 1, -1})).valid);
  EXPECT_TRUE(check_valid(g, line({0, 1, Rational(-101, 100)})).valid);
}

TEST(CheckValid, CoincidentPointsMakeTheDrawingInvalid) {
  SignedGraph g(3);
  auto r = check_valid(g, line({1, 2, 1}));
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.coincident.size(), 1u);
  EXPECT_EQ(r.coincident[0], Edge(0, 2));
}

TEST(CheckValid, ShapeErrors) {
  SignedGraph g(3);
  EXPECT_THROW(check_valid(g, line({0, 1})), std::invalid_argument);
  Drawing plane(2, {0, 0, 1, 0, 0, 1});
  EXPECT_NO_THROW(check_valid(g, plane, 2));
  EXPECT_THROW(check_valid(g, plane, 1), std::invalid_argument);
  EXPECT_THROW(Drawing(2, {0, 0, 1}), std::invalid_argument);
}

TEST(CheckValid, FloatModeHasNoTolerance) {
  SignedGraph g(3, {{0, 1}}, {{0, 2}});
  FloatDrawing tight = FloatDrawing::line({0.0, 1.0, -1.0 - 1e-12});
  EXPECT_TRUE(check_valid(g, tight).valid);
  FloatDrawing equal = FloatDrawing::line({0.0, 1.0, -1.0});
  EXPECT_FALSE(check_valid(g, equal).valid);
}

TEST(CheckValid, AgreesWithNaiveScanOnRandomDrawings) {
  Rng rng(7);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + trial % 6;
    int dim = 1 + trial % 3;
    SignedGraph g = random_signed(n, 0.7, 0.5, rng);
    std::vector<Rational> c;
    for (int i = 0; i < n * dim; ++i) c.emplace_back(coord(rng), 1 + trial % 3);
    Drawing d(dim, c);
    EXPECT_EQ(check_valid(g, d).valid, ref::naive_valid(g, d)) << "trial " << trial;
    EXPECT_EQ(check_valid(g, to_float(d)).valid, ref::naive_valid(g, d));
  }
}

TEST(CheckValid, InvariantUnderTranslationAndPositiveScaling) {
  Rng rng(11);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + trial % 5;
    SignedGraph g = random_signed(n, 0.6, 0.5, rng);
    std::vector<Rational> c;
    for (int i = 0; i < 2 * n; ++i) c.emplace_back(coord(rng));
    Drawing d(2, c);
    Rational scale(coord(rng) * coord(rng) + 1, 7);
    if (sgn(scale) <= 0) scale = Rational(3, 2);
    std::vector<Rational> moved;
    for (std::size_t i = 0; i < c.size(); ++i) {
      moved.push_back(c[i] * scale + (i % 2 ? Rational(-5, 3) : Rational(2)));
    }
    EXPECT_EQ(is_valid(g, d), is_valid(g, Drawing(2, moved)));
  }
}

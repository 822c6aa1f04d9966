#include "sgdraw/validity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sgdraw {
namespace {

template <typename Scalar>
void check_shape(const SignedGraph& g, const BasicDrawing<Scalar>& d,
                 std::optional<int> expected_dim) {
  if (d.size() != g.num_vertices()) {
    throw std::invalid_argument("drawing has " + std::to_string(d.size()) +
                                " points but the graph has " +
                                std::to_string(g.num_vertices()) +
                                " vertices");
  }
  if (expected_dim && *expected_dim != d.dim()) {
    throw std::invalid_argument("drawing dimension " + std::to_string(d.dim()) +
                                " differs from declared dimension " +
                                std::to_string(*expected_dim));
  }
}

template <typename Scalar>
std::vector<Edge> coincident_pairs(const BasicDrawing<Scalar>& d) {
  std::vector<Vertex> idx(static_cast<std::size_t>(d.size()));
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](Vertex a, Vertex b) {
    auto pa = d.point(a);
    auto pb = d.point(b);
    for (int t = 0; t < d.dim(); ++t) {
      if (pa[t] < pb[t]) return true;
      if (pb[t] < pa[t]) return false;
    }
    return a < b;
  };
  std::sort(idx.begin(), idx.end(), less);
  auto same = [&](Vertex a, Vertex b) {
    auto pa = d.point(a);
    auto pb = d.point(b);
    return std::equal(pa.begin(), pa.end(), pb.begin());
  };
  std::vector<Edge> out;
  for (std::size_t s = 0; s < idx.size();) {
    std::size_t e = s + 1;
    while (e < idx.size() && same(idx[s], idx[e])) ++e;
    for (std::size_t a = s; a < e; ++a) {
      for (std::size_t b = a + 1; b < e; ++b) out.emplace_back(idx[a], idx[b]);
    }
    s = e;
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Scalar>
BasicValidityReport<Scalar> check_impl(const SignedGraph& g,
                                       const BasicDrawing<Scalar>& d,
                                       std::optional<int> expected_dim) {
  check_shape(g, d, expected_dim);
  BasicValidityReport<Scalar> report;
  report.coincident = coincident_pairs(d);

  std::vector<std::pair<Vertex, Scalar>> pos;
  std::vector<std::pair<Vertex, Scalar>> neg;
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    pos.clear();
    neg.clear();
    for (const Neighbor& nb : g.neighbors(i)) {
      auto& bucket = nb.sign == Sign::kPositive ? pos : neg;
      bucket.emplace_back(nb.vertex, squared_distance(d, i, nb.vertex));
    }
    if (pos.empty() || neg.empty()) continue;

    auto far_pos = std::max_element(
        pos.begin(), pos.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    auto near_neg = std::min_element(
        neg.begin(), neg.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    if (far_pos->second < near_neg->second) continue;

    // neighbours are already sorted by vertex, so (j, k) comes out ordered
    for (const auto& [j, dj] : pos) {
      for (const auto& [k, dk] : neg) {
        if (!(dj < dk)) report.violations.push_back({i, j, k, dj, dk});
      }
    }
  }
  report.valid = report.coincident.empty() && report.violations.empty();
  return report;
}

}  // namespace

template <typename Scalar>
Scalar squared_distance(const BasicDrawing<Scalar>& d, Vertex a, Vertex b) {
  auto pa = d.point(a);
  auto pb = d.point(b);
  Scalar sum = 0;
  Scalar diff;
  for (int t = 0; t < d.dim(); ++t) {
    diff = pa[t] - pb[t];
    sum += diff * diff;
  }
  return sum;
}

template Rational squared_distance(const Drawing&, Vertex, Vertex);
template double squared_distance(const FloatDrawing&, Vertex, Vertex);

ValidityReport check_valid(const SignedGraph& g, const Drawing& d,
                           std::optional<int> expected_dim) {
  return check_impl(g, d, expected_dim);
}

FloatValidityReport check_valid(const SignedGraph& g, const FloatDrawing& d,
                                std::optional<int> expected_dim) {
  return check_impl(g, d, expected_dim);
}

bool is_valid(const SignedGraph& g, const Drawing& d) {
  return check_valid(g, d).valid;
}

bool is_valid(const SignedGraph& g, const FloatDrawing& d) {
  return check_valid(g, d).valid;
}

}  // namespace sgdraw

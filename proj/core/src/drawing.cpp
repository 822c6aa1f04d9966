#include "sgdraw/drawing.hpp"

#include <algorithm>

namespace sgdraw {

FloatDrawing to_float(const Drawing& d) {
  std::vector<double> coords;
  coords.reserve(d.coordinates().size());
  for (const Rational& q : d.coordinates()) coords.push_back(q.get_d());
  return FloatDrawing(d.dim(), std::move(coords));
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order)
    : order_(std::move(order)) {
  std::vector<char> seen(order_.size(), 0);
  for (Vertex v : order_) {
    if (v < 0 || static_cast<std::size_t>(v) >= order_.size() || seen[v]) {
      throw std::invalid_argument("ordering is not a permutation");
    }
    seen[v] = 1;
  }
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  return VertexOrdering(std::move(order));
}

std::vector<int> VertexOrdering::ranks() const {
  std::vector<int> rank(order_.size());
  for (std::size_t r = 0; r < order_.size(); ++r) {
    rank[order_[r]] = static_cast<int>(r);
  }
  return rank;
}

VertexOrdering VertexOrdering::reversed() const {
  std::vector<Vertex> rev(order_.rbegin(), order_.rend());
  return VertexOrdering(std::move(rev));
}

Clustering::Clustering(std::vector<int> labels) : labels_(std::move(labels)) {
  int max_label = -1;
  for (int l : labels_) {
    if (l < 0) throw std::invalid_argument("negative cluster label");
    max_label = std::max(max_label, l);
  }
  std::vector<char> used(static_cast<std::size_t>(max_label + 1), 0);
  for (int l : labels_) used[l] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw std::invalid_argument("cluster labels are not contiguous");
  }
  num_clusters_ = max_label + 1;
}

}  // namespace sgdraw

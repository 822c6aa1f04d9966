#pragma once

#include "sgdraw/rational.hpp"
#include "sgdraw/signed_graph.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace sgdraw {

// One point of dimension `dim` per vertex, stored row-major. Injectivity is
// deliberately not enforced here; check_valid reports coincident points.
template <typename Scalar>
class BasicDrawing {
 public:
  using value_type = Scalar;

  BasicDrawing() = default;
  BasicDrawing(int dim, std::vector<Scalar> coordinates)
      : dim_(dim), coordinates_(std::move(coordinates)) {
    if (dim_ < 1) throw std::invalid_argument("drawing dimension must be >= 1");
    if (coordinates_.size() % static_cast<std::size_t>(dim_) != 0) {
      throw std::invalid_argument(
          "coordinate count is not a multiple of the dimension");
    }
  }

  static BasicDrawing line(std::vector<Scalar> positions) {
    return BasicDrawing(1, std::move(positions));
  }

  int dim() const { return dim_; }
  int size() const {
    return static_cast<int>(coordinates_.size() /
                            static_cast<std::size_t>(dim_));
  }

  std::span<const Scalar> point(Vertex v) const {
    return std::span<const Scalar>(coordinates_)
        .subspan(static_cast<std::size_t>(v) * static_cast<std::size_t>(dim_),
                 static_cast<std::size_t>(dim_));
  }
  std::span<Scalar> point(Vertex v) {
    return std::span<Scalar>(coordinates_)
        .subspan(static_cast<std::size_t>(v) * static_cast<std::size_t>(dim_),
                 static_cast<std::size_t>(dim_));
  }
  const Scalar& coordinate(Vertex v, int axis) const { return point(v)[axis]; }

  std::span<const Scalar> coordinates() const { return coordinates_; }

  friend bool operator==(const BasicDrawing&, const BasicDrawing&) = default;

 private:
  int dim_ = 1;
  std::vector<Scalar> coordinates_;
};

using Drawing = BasicDrawing<Rational>;
using FloatDrawing = BasicDrawing<double>;

FloatDrawing to_float(const Drawing& d);

// Left-to-right arrangement of the vertices: order()[r] is the vertex of
// rank r.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  explicit VertexOrdering(std::vector<Vertex> order);

  static VertexOrdering identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  std::span<const Vertex> order() const { return order_; }
  Vertex at(int rank) const { return order_[static_cast<std::size_t>(rank)]; }
  // rank ∘ order = identity
  std::vector<int> ranks() const;
  VertexOrdering reversed() const;

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) =
      default;

 private:
  std::vector<Vertex> order_;
};

// Cluster label per vertex; labels are 0..num_clusters-1 with none skipped.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<int> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_clusters() const { return num_clusters_; }
  int label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::span<const int> labels() const { return labels_; }

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<int> labels_;
  int num_clusters_ = 0;
};

}  // namespace sgdraw

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mrig/matrix.hpp"

namespace mrig {

struct Edge {
  std::size_t i;
  std::size_t j;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Symmetric zero-diagonal matrix W with nonnegative off-diagonal entries,
/// together with the graph G it induces (an edge {i,j} whenever w_ij > 0).
class WeightMatrix {
 public:
  WeightMatrix() = default;

  /// Assembles W from upper-triangle entries (i < j, w > 0, 0-based).
  /// Throws GraphError on a duplicate pair, a nonpositive or non-finite
  /// weight, or an index outside [0, n).
  static WeightMatrix build(std::size_t n, std::span<const Edge> entries);

  /// Validates an already assembled dense matrix.  Exact zeros are not edges.
  static WeightMatrix from_dense(const Matrix& w);

  static WeightMatrix zero(std::size_t n);

  std::size_t size() const noexcept { return w_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return w_(i, j); }
  const Matrix& dense() const noexcept { return w_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  bool connected() const noexcept { return connected_; }
  bool is_tree() const noexcept { return is_tree_; }

  /// Principal submatrix on `indices`, in the given order.
  WeightMatrix principal(std::span<const std::size_t> indices) const;
  /// Leading k x k block W_k.
  WeightMatrix leading(std::size_t k) const;

  /// (1/2) u^T W v.  For u = v this is sum_{i<j} w_ij u_i u_j, the edge-sum
  /// convention used by every exponent in the library.
  double half_form(std::span<const double> u, std::span<const double> v) const;

 private:
  explicit WeightMatrix(Matrix w);

  Matrix w_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  bool connected_ = true;
  bool is_tree_ = true;
};

}  // namespace mrig

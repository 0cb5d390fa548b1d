#include "mrig/weight_matrix.hpp"

#include <cmath>
#include <string>

#include "mrig/errors.hpp"

namespace mrig {

WeightMatrix::WeightMatrix(Matrix w) : w_(std::move(w)) {
  const std::size_t n = w_.rows();
  degrees_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (w_(i, j) > 0.0) {
        edges_.push_back({i, j, w_(i, j)});
        ++degrees_[i];
        ++degrees_[j];
      }

  // Connectivity by depth-first traversal from vertex 0.
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  std::size_t reached = 0;
  if (n > 0) {
    stack.push_back(0);
    seen[0] = true;
  }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t u = 0; u < n; ++u)
      if (!seen[u] && w_(v, u) > 0.0) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  connected_ = reached == n;
  is_tree_ = connected_ && n > 0 && edges_.size() == n - 1;
}

WeightMatrix WeightMatrix::build(std::size_t n, std::span<const Edge> entries) {
  Matrix w(n, n);
  for (const Edge& e : entries) {
    if (e.i >= n || e.j >= n || e.i >= e.j)
      throw GraphError(GraphError::Kind::IndexOutOfRange,
                       "edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                           ") must satisfy 0 <= i < j < " + std::to_string(n));
    if (!std::isfinite(e.w) || e.w <= 0.0)
      throw GraphError(GraphError::Kind::InvalidWeight,
                       "edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                           ") has nonpositive weight " + std::to_string(e.w));
    if (w(e.i, e.j) != 0.0)
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "duplicate edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    w(e.i, e.j) = e.w;
    w(e.j, e.i) = e.w;
  }
  return WeightMatrix(std::move(w));
}

WeightMatrix WeightMatrix::from_dense(const Matrix& w) {
  if (!w.square()) throw DimensionError("weight matrix must be square");
  const std::size_t n = w.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (w(i, i) != 0.0) throw GraphError(GraphError::Kind::NonZeroDiagonal, "weight matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (w(i, j) != w(j, i)) throw GraphError(GraphError::Kind::NotSymmetric, "weight matrix must be symmetric");
      if (!std::isfinite(w(i, j)) || w(i, j) < 0.0)
        throw GraphError(GraphError::Kind::InvalidWeight, "weight matrix entries must be finite and nonnegative");
    }
  }
  return WeightMatrix(w);
}

WeightMatrix WeightMatrix::zero(std::size_t n) { return WeightMatrix(Matrix(n, n)); }

WeightMatrix WeightMatrix::principal(std::span<const std::size_t> indices) const {
  for (std::size_t i : indices)
    if (i >= size()) throw DimensionError("principal submatrix index out of range");
  return WeightMatrix(w_.select(indices, indices));
}

WeightMatrix WeightMatrix::leading(std::size_t k) const {
  if (k > size()) throw DimensionError("leading block larger than the matrix");
  return WeightMatrix(w_.block(0, 0, k, k));
}

double WeightMatrix::half_form(std::span<const double> u, std::span<const double> v) const {
  if (u.size() != size() || v.size() != size()) throw DimensionError("weight form size mismatch");
  return 0.5 * bilinear(u, w_, v);
}

}  // namespace mrig

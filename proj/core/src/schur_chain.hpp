#pragma once

#include <cstddef>
#include <span>

#include "mrig/matrix.hpp"
#include "mrig/weight_matrix.hpp"

namespace mrig::detail {

// Sequential Schur coordinates of C_W.  With c_m = W[0:m, m] and the head
// x_1..x_{m}, coordinate m is parameterized by t_m > 0 through
//
//   x_m = (t_m^2 + c_m^T M_head^{-1} c_m) / 2,
//
// which maps (0, inf)^n onto C_W with dx / sqrt(det M_x) = dt and
// det M_x = prod_m t_m^2.  The chain keeps the Cholesky factor of M_x
// (row m is (-L^{-1} c_m, t_m)), so levels must be visited in order.
class SchurChain {
 public:
  explicit SchurChain(const WeightMatrix& w);

  std::size_t size() const noexcept { return n_; }

  // Computes u_m = L_head^{-1} c_m from the fixed head; returns |u_m|^2.
  double prepare(std::size_t m);
  // Fixes t_m (after prepare(m)) and returns x_m.
  double fix(std::size_t m, double t);

  std::span<const double> u(std::size_t m) const { return u_.row(m).first(m); }
  double x(std::size_t m) const { return x_[m]; }
  std::span<const double> x() const { return x_; }
  // Lower Cholesky factor of M_x once all levels are fixed.
  const Matrix& lower() const noexcept { return lower_; }

 private:
  std::size_t n_;
  const Matrix* w_;
  Matrix lower_;
  Matrix u_;
  Vector uu_;
  Vector x_;
};

}  // namespace mrig::detail

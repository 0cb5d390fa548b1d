#pragma once

#include <cstddef>
#include <span>
#include <variant>

#include "mrig/matrix.hpp"
#include "mrig/weight_matrix.hpp"

namespace mrig {

inline constexpr double kDefaultConeTolerance = 1e-12;

/// M_x = 2 diag(x) - W.  No positivity requirement.
Matrix m_matrix(const WeightMatrix& w, std::span<const double> x);

struct ConeRejection {
  std::size_t pivot;
  double value;
};

/// A point x certified to lie in the open set C_W = {x : M_x positive
/// definite}, carrying the factorization data every density evaluation needs.
class ConePoint {
 public:
  /// Factorizes M_x; rejects unless every squared pivot exceeds
  /// rel_tol * max_i |2 x_i|.  Boundary points are rejected.
  static std::variant<ConePoint, ConeRejection> test(const WeightMatrix& w, std::span<const double> x,
                                                    double rel_tol = kDefaultConeTolerance);
  /// As test(), but throws NotInConeError on rejection.
  static ConePoint make(const WeightMatrix& w, std::span<const double> x,
                        double rel_tol = kDefaultConeTolerance);

  std::size_t size() const noexcept { return x_.size(); }
  const Vector& x() const noexcept { return x_; }
  const Cholesky& chol() const noexcept { return chol_; }
  double log_det() const noexcept { return log_det_; }
  /// M_x^{-1}; entrywise nonnegative up to rounding.
  const Matrix& inv() const noexcept { return inv_; }

 private:
  ConePoint(Vector x, Cholesky chol);

  Vector x_;
  Cholesky chol_;
  double log_det_;
  Matrix inv_;
};

/// Convenience wrapper: true iff x is in C_W.
bool in_cone(const WeightMatrix& w, std::span<const double> x, double rel_tol = kDefaultConeTolerance);

/// Split of M_x into the leading k-block and the Schur complement of the tail:
///   S = 2 diag(x_{k+1..n}) - W' - C^T M_head^{-1} C,  C = W[0:k, k:n].
struct SchurSplit {
  ConePoint head;  // factorization of M_{x_1..x_k} under W_k
  Matrix schur;    // S, (n-k) x (n-k)
  Matrix cross;    // C, k x (n-k)
};

SchurSplit schur_split(const ConePoint& p, const WeightMatrix& w, std::size_t k);

}  // namespace mrig

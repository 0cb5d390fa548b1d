#include "mrig/cone.hpp"

#include <cmath>
#include <limits>

#include "mrig/errors.hpp"

namespace mrig {

Matrix m_matrix(const WeightMatrix& w, std::span<const double> x) {
  if (x.size() != w.size()) throw DimensionError("point dimension does not match the weight matrix");
  Matrix m(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = (i == j) ? 2.0 * x[i] : -w(i, j);
  return m;
}

ConePoint::ConePoint(Vector x, Cholesky chol)
    : x_(std::move(x)), chol_(std::move(chol)), log_det_(chol_.log_det()), inv_(chol_.inverse()) {}

std::variant<ConePoint, ConeRejection> ConePoint::test(const WeightMatrix& w, std::span<const double> x,
                                                      double rel_tol) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("cone tolerance must be positive");
  const Matrix m = m_matrix(w, x);
  for (double xi : x)
    if (!std::isfinite(xi)) return ConeRejection{0, std::numeric_limits<double>::quiet_NaN()};
  const double scale = m.max_abs_diagonal();
  if (scale == 0.0) return ConeRejection{0, 0.0};
  auto f = Cholesky::factor(m, rel_tol * scale);
  if (auto* fail = std::get_if<FactorFailure>(&f)) return ConeRejection{fail->pivot, fail->value};
  return ConePoint(Vector(x.begin(), x.end()), std::get<Cholesky>(std::move(f)));
}

ConePoint ConePoint::make(const WeightMatrix& w, std::span<const double> x, double rel_tol) {
  auto r = test(w, x, rel_tol);
  if (auto* rej = std::get_if<ConeRejection>(&r)) throw NotInConeError(rej->pivot, rej->value);
  return std::get<ConePoint>(std::move(r));
}

bool in_cone(const WeightMatrix& w, std::span<const double> x, double rel_tol) {
  return std::holds_alternative<ConePoint>(ConePoint::test(w, x, rel_tol));
}

SchurSplit schur_split(const ConePoint& p, const WeightMatrix& w, std::size_t k) {
  const std::size_t n = p.size();
  if (w.size() != n) throw DimensionError("cone point and weight matrix disagree in dimension");
  if (k < 1 || k >= n) throw std::out_of_range("schur_split: k must satisfy 1 <= k < n");

  const std::span<const double> x = p.x();
  ConePoint head = ConePoint::make(w.leading(k), x.first(k));
  Matrix cross = w.dense().block(0, k, k, n - k);

  // S = 2 diag(x_tail) - W' - C^T M_head^{-1} C
  const Matrix correction = cross.transposed() * head.inv() * cross;
  Matrix schur(n - k, n - k);
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j < n - k; ++j)
      schur(i, j) = (i == j ? 2.0 * x[k + i] : -w(k + i, k + j)) - correction(i, j);
  return {std::move(head), std::move(schur), std::move(cross)};
}

}  // namespace mrig

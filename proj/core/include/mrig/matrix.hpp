#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

namespace mrig {

using Vector = std::vector<double>;

// Dense row-major matrix.  Sizes in this library are small (n <= ~50), so
// there is no attempt at blocking or expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<double>& data() const noexcept { return data_; }

  Matrix transposed() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  double max_abs_diagonal() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Vector operator*(const Matrix& a, std::span<const double> x);

double dot(std::span<const double> x, std::span<const double> y);
// x^T A y
double bilinear(std::span<const double> x, const Matrix& a, std::span<const double> y);
double max_abs_diff(const Matrix& a, const Matrix& b);

struct FactorFailure {
  std::size_t pivot;  // first pivot that was not above the floor
  double value;       // its value before the square root
};

// Lower Cholesky factor A = L L^T in natural index order.  No pivoting: the
// k-th squared pivot is the Schur complement of the leading k x k block, which
// is what cone membership, the Schur split and the sampler all reason about.
class Cholesky {
 public:
  // `pivot_floor` is absolute; every squared pivot must exceed it.
  static std::variant<Cholesky, FactorFailure> factor(const Matrix& a, double pivot_floor = 0.0);

  std::size_t size() const noexcept { return lower_.rows(); }
  const Matrix& lower() const noexcept { return lower_; }
  double log_det() const;

  Vector forward(std::span<const double> b) const;   // L^{-1} b
  Vector backward(std::span<const double> b) const;  // L^{-T} b
  Vector solve(std::span<const double> b) const;     // A^{-1} b
  Matrix inverse() const;

 private:
  explicit Cholesky(Matrix lower) : lower_(std::move(lower)) {}
  Matrix lower_;
};

// Determinant by cofactor expansion; exponential cost, for cross-checks at n <= 8.
double cofactor_det(const Matrix& a);

}  // namespace mrig

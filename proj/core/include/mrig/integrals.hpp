#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "mrig/cone.hpp"
#include "mrig/gstz.hpp"
#include "mrig/weight_matrix.hpp"

namespace mrig {

// Independent numerical checks of the closed-form integrals: nested
// double-exponential quadrature over Schur coordinates, and Monte Carlo
// estimators with standard errors.  Quadrature is limited to desk scale.

enum class EstimateMethod { Quadrature, MonteCarlo };

struct Estimate {
  double value = 0.0;
  double error = 0.0;  // quadrature error bound, or Monte Carlo standard error
  std::size_t evals = 0;
  EstimateMethod method = EstimateMethod::Quadrature;
};

struct McOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 1'000'000;
  unsigned threads = 1;
};

inline constexpr std::size_t kMaxQuadratureDim = 3;

/// (pi/2)^{n/2} (y_1...y_n)^{-1/2} exp(-sum_{i<j} w_ij sqrt(y_i y_j))
double stz_rhs(const WeightMatrix& w, std::span<const double> y);
/// (pi/2)^{n/2} exp(-<a, b>) / (a_1...a_n); independent of W.
double gstz_rhs(std::span<const double> a, std::span<const double> b);

/// int_{C_W} exp(-<x, y>) / sqrt(det M_x) dx over Schur coordinates.
Estimate quad_stz_lhs(const WeightMatrix& w, std::span<const double> y);
/// Same integral in the original x coordinates (inverse square-root
/// singularity at each lower limit); a second route for cross-checking.
Estimate quad_stz_lhs_direct(const WeightMatrix& w, std::span<const double> y);

/// int_{C_W} exp(-(1/2)(a^T M_x a + b^T M_x^{-1} b)) / sqrt(det M_x) dx.
Estimate quad_gstz_lhs(const WeightMatrix& w, std::span<const double> a, std::span<const double> b);
/// Importance sampling of the same integral: Schur coordinates t_m are drawn
/// half-normal with scale 1/a_m.  Any dimension.
Estimate mc_gstz_lhs(const WeightMatrix& w, std::span<const double> a, std::span<const double> b,
                     const McOptions& options);

/// int_{C_W} exp(-(1/2) a^T M_x a) det(M_x)^{q-1} dx for a spanning tree:
///   2^{q-1} Gamma(q) e^{sum_{i<j} w_ij a_i a_j} prod_i a_i^{q(s(i)-2)}
///     * prod_{edges} w_ij^q K_q(a_i a_j w_ij).
double tree_integral_closed(const WeightMatrix& w, std::span<const double> a, double q);
/// int_{C_W} exp(-<x, y>) det(M_x)^{q-1} dx for a spanning tree.
double tree_integral_closed_y(const WeightMatrix& w, std::span<const double> y, double q);
/// Quadrature of int_{C_W} exp(-<x, y>) det(M_x)^{q-1} dx (any W, n <= 3).
Estimate quad_tree_integral(const WeightMatrix& w, std::span<const double> y, double q);

/// Pr(B > 0) for B ~ N(0, M_x), as the convolution integral
///   (2 pi^2)^{-n/2} int_{C_W, t <= x} dt / (sqrt(prod (x_i - t_i)) sqrt(det M_t)).
/// Integrated over Schur coordinates of t with closed-form limits.  n <= 3.
Estimate orthant_via_convolution(const WeightMatrix& w, const ConePoint& x);
/// Direct Gaussian Monte Carlo with binomial standard error.
Estimate orthant_mc(const WeightMatrix& w, const ConePoint& x, const McOptions& options);
/// n = 2 only: arccos(w_12 / (2 sqrt(x_1 x_2))) / (2 pi).
double orthant_arccos(const WeightMatrix& w, const ConePoint& x);

struct LaplaceCheck {
  Estimate lhs;
  double rhs;
};

/// lhs = int_{C_W} exp(-<x, y>) E[exp(-<theta, B>) 1{B > 0}] dx, B ~ N(0, M_x):
/// nested quadrature for n = 1, nested Monte Carlo for n = 2.
/// rhs = prod_i (2 sqrt(y_i) (sqrt(y_i) + theta_i))^{-1} exp(-sum_{i<j} w_ij sqrt(y_i y_j)).
LaplaceCheck orthant_laplace_check(const WeightMatrix& w, std::span<const double> y,
                                   std::span<const double> theta, const McOptions& options);

/// Monte Carlo E exp(-<s, X>) from the exact sampler.
Estimate mc_laplace(const GstzParams& p, std::span<const double> s, const McOptions& options);

}  // namespace mrig

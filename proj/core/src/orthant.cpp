#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mrig/errors.hpp"
#include "mrig/integrals.hpp"
#include "monte_carlo.hpp"
#include "quadrature.hpp"
#include "schur_chain.hpp"

namespace mrig {

namespace {

constexpr double kConvolutionTolerance = 1e-9;
constexpr double kLaplaceTolerance = 1e-12;

// Convolution integral over Schur coordinates tau of t.  With t_i fixed for
// i < m and t_i = x_i for i > m, the feasible t_m satisfy
//   r^T N^{-1} r < 2 t_m <= 2 x_m,
// where N is M over every index but m and r = W[others, m].
class ConvolutionLevels {
 public:
  ConvolutionLevels(const WeightMatrix& w, const Vector& x) : w_(w), x_(x), chain_(w) {}

  double integrate(std::size_t m, std::size_t& evals, double* top_error) {
    const std::size_t n = x_.size();
    const double base = chain_.prepare(m);
    const double up2 = 2.0 * x_[m] - base;
    if (!(up2 > 0.0)) return 0.0;
    const double tau_up = std::sqrt(up2);
    double tau_low = 0.0;
    if (m + 1 < n) {
      const double need = feasibility_bound(m);
      if (!std::isfinite(need)) return 0.0;
      tau_low = std::sqrt(std::max(0.0, need - base));
    }
    if (!(tau_up > tau_low)) return 0.0;

    auto f = [&](double tau, double tauc) -> double {
      // x_m - t_m = (tau_up - tau)(tau_up + tau) / 2
      const double gap = tauc > 0.0 ? tauc : tau_up - tau;
      if (!(gap > 0.0) || !(tau > 0.0)) return 0.0;
      chain_.fix(m, tau);
      double inner = 1.0;
      if (m + 1 < n) {
        inner = integrate(m + 1, evals, nullptr);
      } else {
        ++evals;
      }
      const double v = inner / std::sqrt(0.5 * gap * (tau_up + tau));
      return std::isfinite(v) ? v : 0.0;
    };
    const auto r = detail::integrate_interval(f, tau_low, tau_up, kConvolutionTolerance, m);
    if (top_error) *top_error = r.error;
    return r.value;
  }

 private:
  double feasibility_bound(std::size_t m) const {
    const std::size_t n = x_.size();
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
      if (i != m) others.push_back(i);
    const std::size_t k = others.size();
    Matrix nm(k, k);
    Vector r(k);
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t i = others[a];
      r[a] = w_(i, m);
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t j = others[b];
        nm(a, b) = (a == b) ? 2.0 * (i < m ? chain_.x(i) : x_[i]) : -w_(i, j);
      }
    }
    auto f = Cholesky::factor(nm);
    if (std::holds_alternative<FactorFailure>(f)) return std::numeric_limits<double>::infinity();
    const Vector z = std::get<Cholesky>(f).forward(r);
    return dot(z, z);
  }

  const WeightMatrix& w_;
  const Vector& x_;
  detail::SchurChain chain_;
};

void require_match(const WeightMatrix& w, const ConePoint& x) {
  if (w.size() != x.size()) throw DimensionError("cone point and weight matrix disagree in dimension");
}

}  // namespace

Estimate orthant_via_convolution(const WeightMatrix& w, const ConePoint& x) {
  require_match(w, x);
  const std::size_t n = w.size();
  if (n == 0 || n > kMaxQuadratureDim)
    throw DimensionError("convolution quadrature is limited to 1 <= n <= " + std::to_string(kMaxQuadratureDim));
  ConvolutionLevels levels(w, x.x());
  Estimate e;
  double top_error = 0.0;
  const double raw = levels.integrate(0, e.evals, &top_error);
  // (2 pi^2)^{-n/2}
  const double scale = std::pow(2.0 * std::numbers::pi * std::numbers::pi, -0.5 * static_cast<double>(n));
  e.value = scale * raw;
  e.error = scale * top_error + static_cast<double>(n) * kConvolutionTolerance * std::abs(e.value);
  e.method = EstimateMethod::Quadrature;
  return e;
}

Estimate orthant_mc(const WeightMatrix& w, const ConePoint& x, const McOptions& options) {
  require_match(w, x);
  const std::size_t n = w.size();
  const Matrix& l = x.chol().lower();
  return detail::mc_estimate(options, [&] {
    return [&, z = Vector(n)](Rng& rng) mutable {
      for (double& v : z) v = standard_normal(rng);
      for (std::size_t i = 0; i < n; ++i) {
        double b = 0.0;
        for (std::size_t j = 0; j <= i; ++j) b += l(i, j) * z[j];
        if (!(b > 0.0)) return 0.0;
      }
      return 1.0;
    };
  });
}

double orthant_arccos(const WeightMatrix& w, const ConePoint& x) {
  require_match(w, x);
  if (w.size() != 2) throw DimensionError("arccos orthant formula needs n = 2");
  const double c = w(0, 1) / (2.0 * std::sqrt(x.x()[0] * x.x()[1]));
  return std::acos(c) / (2.0 * std::numbers::pi);
}

LaplaceCheck orthant_laplace_check(const WeightMatrix& w, std::span<const double> y, std::span<const double> theta,
                                   const McOptions& options) {
  const std::size_t n = w.size();
  if (y.size() != n || theta.size() != n) throw DimensionError("y and theta must match W");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(y[i] > 0.0) || !std::isfinite(y[i])) throw std::invalid_argument("y entries must be positive");
    if (!(theta[i] >= 0.0) || !std::isfinite(theta[i])) throw std::invalid_argument("theta entries must be nonnegative");
  }

  LaplaceCheck out;
  Vector root(n);
  double log_rhs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    root[i] = std::sqrt(y[i]);
    log_rhs -= std::log(2.0 * root[i] * (root[i] + theta[i]));
  }
  out.rhs = std::exp(log_rhs - w.half_form(root, root));

  if (n == 1) {
    // x = t^2 / 2, dx = t dt; inner E over B ~ N(0, 2x) = N(0, t^2).
    const double yy = y[0];
    const double th = theta[0];
    std::size_t evals = 0;
    auto outer = [&](double t) -> double {
      if (!(t > 0.0) || !std::isfinite(t)) return 0.0;
      auto inner = [&](double b) -> double {
        ++evals;
        const double z = b / t;
        return std::exp(-th * b - 0.5 * z * z);
      };
      const auto r = detail::integrate_half_line(inner, 0.0, kLaplaceTolerance, 1);
      const double v = std::exp(-0.5 * t * t * yy) * r.value / std::sqrt(2.0 * std::numbers::pi);
      return std::isfinite(v) ? v : 0.0;
    };
    const auto r = detail::integrate_half_line(outer, 0.0, kLaplaceTolerance, 0);
    out.lhs.value = r.value;
    out.lhs.error = r.error + kLaplaceTolerance * std::abs(r.value);
    out.lhs.evals = evals;
    out.lhs.method = EstimateMethod::Quadrature;
    return out;
  }
  if (n != 2) throw DimensionError("nested Laplace check is limited to n <= 2");

  // Schur coordinates drawn half-normal with scale 1/sqrt(y_m); one Gaussian
  // draw B = L z per point estimates the inner expectation.
  double log_const = 0.0;
  for (std::size_t m = 0; m < n; ++m) log_const += 0.5 * std::log(std::numbers::pi / 2.0) - 0.5 * std::log(y[m]);
  out.lhs = detail::mc_estimate(options, [&] {
    return [&, chain = detail::SchurChain(w), z = Vector(n)](Rng& rng) mutable {
      double log_w = log_const;
      double jac = 1.0;
      for (std::size_t m = 0; m < n; ++m) {
        const double base = chain.prepare(m);
        const double t = std::abs(standard_normal(rng)) / root[m];
        chain.fix(m, t);
        log_w -= 0.5 * base * y[m];
        jac *= t;
      }
      for (double& v : z) v = standard_normal(rng);
      const Matrix& l = chain.lower();
      double tb = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double b = 0.0;
        for (std::size_t j = 0; j <= i; ++j) b += l(i, j) * z[j];
        if (!(b > 0.0)) return 0.0;
        tb += theta[i] * b;
      }
      const double v = std::exp(log_w - tb) * jac;
      return std::isfinite(v) ? v : 0.0;
    };
  });
  return out;
}

}  // namespace mrig

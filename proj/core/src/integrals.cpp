#include "mrig/integrals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mrig/bessel.hpp"
#include "mrig/errors.hpp"
#include "monte_carlo.hpp"
#include "quadrature.hpp"
#include "schur_chain.hpp"

namespace mrig {

namespace {

constexpr double kNestedTolerance = 1e-10;

void require_desk_scale(std::size_t n) {
  if (n == 0) throw DimensionError("dimension must be at least 1");
  if (n > kMaxQuadratureDim)
    throw DimensionError("quadrature is limited to n <= " + std::to_string(kMaxQuadratureDim) + ", got " +
                         std::to_string(n));
}

void require_positive(std::span<const double> v, const char* what) {
  for (double x : v)
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument(std::string(what) + " entries must be positive");
}

void require_size(std::span<const double> v, std::size_t n, const char* what) {
  if (v.size() != n) throw DimensionError(std::string(what) + " dimension does not match W");
}

// Integrates prod_m level.factor(chain, m, t_m) over (0, inf)^n in Schur
// coordinates.  `level.prepare(chain, m)` runs once the head t_1..t_{m-1} is
// fixed; `level.factor` runs after chain.fix(m, t).
template <class Level>
double integrate_levels(detail::SchurChain& chain, Level& level, std::size_t m, std::size_t& evals,
                        double* top_error) {
  const std::size_t n = chain.size();
  chain.prepare(m);
  level.prepare(chain, m);
  auto f = [&](double t) -> double {
    if (!(t > 0.0) || !std::isfinite(t)) return 0.0;
    chain.fix(m, t);
    const double g = level.factor(chain, m, t);
    if (!(g > 0.0) || !std::isfinite(g)) return 0.0;
    double inner = 1.0;
    if (m + 1 < n) {
      inner = integrate_levels(chain, level, m + 1, evals, nullptr);
    } else {
      ++evals;
    }
    const double v = g * inner;
    return std::isfinite(v) ? v : 0.0;
  };
  const auto r = detail::integrate_half_line(f, 0.0, kNestedTolerance, m);
  if (top_error) *top_error = r.error;
  return r.value;
}

template <class Level>
Estimate schur_quadrature(const WeightMatrix& w, Level level) {
  detail::SchurChain chain(w);
  Estimate e;
  double top_error = 0.0;
  e.value = integrate_levels(chain, level, 0, e.evals, &top_error);
  e.error = top_error + static_cast<double>(w.size()) * kNestedTolerance * std::abs(e.value);
  e.method = EstimateMethod::Quadrature;
  return e;
}

// exp(-x_m y_m) times t_m^{power}.
struct LinearLevel {
  std::span<const double> y;
  double power = 0.0;

  void prepare(const detail::SchurChain&, std::size_t) {}
  double factor(const detail::SchurChain& chain, std::size_t m, double t) const {
    const double e = std::exp(-chain.x(m) * y[m]);
    return power == 0.0 ? e : e * std::pow(t, power);
  }
};

// exp(-x_m a_m^2 - (1/2) g_m^2 / t_m^2) with g_m = b_m + u_m . (L^{-1} b)_head;
// the running vector L^{-1} b gives b^T M^{-1} b = sum_m (g_m / t_m)^2.
struct GstzLevel {
  std::span<const double> a;
  std::span<const double> b;
  Vector lb;
  Vector g;

  void prepare(const detail::SchurChain& chain, std::size_t m) {
    const auto u = chain.u(m);
    double s = b[m];
    for (std::size_t i = 0; i < m; ++i) s += u[i] * lb[i];
    g[m] = s;
  }
  double factor(const detail::SchurChain& chain, std::size_t m, double t) {
    lb[m] = g[m] / t;
    return std::exp(-chain.x(m) * a[m] * a[m] - 0.5 * lb[m] * lb[m]);
  }
};

double direct_level(const WeightMatrix& w, std::span<const double> y, detail::SchurChain& chain, std::size_t m,
                    std::size_t& evals, double* top_error) {
  const std::size_t n = w.size();
  const double uu = chain.prepare(m);
  const double lower = 0.5 * uu;
  // Integrand in x_m: exp(-x_m y_m) / t_m with t_m = sqrt(2 x_m - |u|^2).
  auto f = [&](double x) -> double {
    const double t = std::sqrt(2.0 * (x - lower));
    if (!(t > 0.0) || !std::isfinite(t)) return 0.0;
    chain.fix(m, t);
    double inner = 1.0;
    if (m + 1 < n) {
      inner = direct_level(w, y, chain, m + 1, evals, nullptr);
    } else {
      ++evals;
    }
    const double v = std::exp(-x * y[m]) / t * inner;
    return std::isfinite(v) ? v : 0.0;
  };
  const auto r = detail::integrate_half_line(f, lower, kNestedTolerance, m);
  if (top_error) *top_error = r.error;
  return r.value;
}

}  // namespace

double stz_rhs(const WeightMatrix& w, std::span<const double> y) {
  require_size(y, w.size(), "y");
  require_positive(y, "y");
  Vector root(y.size());
  double log_v = 0.5 * static_cast<double>(y.size()) * std::log(std::numbers::pi / 2.0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    root[i] = std::sqrt(y[i]);
    log_v -= 0.5 * std::log(y[i]);
  }
  return std::exp(log_v - w.half_form(root, root));
}

double gstz_rhs(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("a and b dimensions differ");
  require_positive(a, "a");
  double log_v = 0.5 * static_cast<double>(a.size()) * std::log(std::numbers::pi / 2.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(b[i] >= 0.0)) throw std::invalid_argument("b entries must be nonnegative");
    log_v -= a[i] * b[i] + std::log(a[i]);
  }
  return std::exp(log_v);
}

Estimate quad_stz_lhs(const WeightMatrix& w, std::span<const double> y) {
  require_desk_scale(w.size());
  require_size(y, w.size(), "y");
  require_positive(y, "y");
  return schur_quadrature(w, LinearLevel{y, 0.0});
}

Estimate quad_stz_lhs_direct(const WeightMatrix& w, std::span<const double> y) {
  require_desk_scale(w.size());
  require_size(y, w.size(), "y");
  require_positive(y, "y");
  detail::SchurChain chain(w);
  Estimate e;
  double top_error = 0.0;
  e.value = direct_level(w, y, chain, 0, e.evals, &top_error);
  e.error = top_error + static_cast<double>(w.size()) * kNestedTolerance * std::abs(e.value);
  return e;
}

Estimate quad_gstz_lhs(const WeightMatrix& w, std::span<const double> a, std::span<const double> b) {
  require_desk_scale(w.size());
  require_size(a, w.size(), "a");
  require_size(b, w.size(), "b");
  require_positive(a, "a");
  for (double v : b)
    if (!(v >= 0.0)) throw std::invalid_argument("b entries must be nonnegative");
  const Vector av(a.begin(), a.end());
  Estimate e = schur_quadrature(w, GstzLevel{a, b, Vector(w.size()), Vector(w.size())});
  // exp(-(1/2) a^T M a) = exp(sum_{i<j} w_ij a_i a_j) prod_m exp(-x_m a_m^2)
  const double scale = std::exp(w.half_form(av, av));
  e.value *= scale;
  e.error *= scale;
  return e;
}

Estimate mc_gstz_lhs(const WeightMatrix& w, std::span<const double> a, std::span<const double> b,
                     const McOptions& options) {
  const std::size_t n = w.size();
  require_size(a, n, "a");
  require_size(b, n, "b");
  require_positive(a, "a");
  const Vector av(a.begin(), a.end());
  // Weight per level: sqrt(pi/2)/a_m * exp(-(1/2) a_m^2 |u_m|^2 - (1/2) g_m^2 / t_m^2).
  double log_const = w.half_form(av, av);
  for (std::size_t m = 0; m < n; ++m) log_const += 0.5 * std::log(std::numbers::pi / 2.0) - std::log(a[m]);
  return detail::mc_estimate(options, [&] {
    return [&, chain = detail::SchurChain(w), lb = Vector(n)](Rng& rng) mutable {
      double log_w = log_const;
      for (std::size_t m = 0; m < n; ++m) {
        const double uu = chain.prepare(m);
        const double t = std::abs(standard_normal(rng)) / a[m];
        chain.fix(m, t);
        const auto u = chain.u(m);
        double g = b[m];
        for (std::size_t i = 0; i < m; ++i) g += u[i] * lb[i];
        lb[m] = g / t;
        log_w -= 0.5 * a[m] * a[m] * uu + 0.5 * lb[m] * lb[m];
      }
      const double v = std::exp(log_w);
      return std::isfinite(v) ? v : 0.0;
    };
  });
}

double tree_integral_closed(const WeightMatrix& w, std::span<const double> a, double q) {
  require_size(a, w.size(), "a");
  require_positive(a, "a");
  Vector y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = a[i] * a[i];
  const Vector av(a.begin(), a.end());
  // exp(-(1/2) a^T M a) = exp(-<x, a^2>) exp(sum_{i<j} w_ij a_i a_j)
  return tree_integral_closed_y(w, y, q) * std::exp(w.half_form(av, av));
}

double tree_integral_closed_y(const WeightMatrix& w, std::span<const double> y, double q) {
  if (!w.is_tree()) throw std::invalid_argument("tree integral requires W to be a spanning tree");
  if (!(q > 0.0) || !std::isfinite(q)) throw std::domain_error("tree integral requires q > 0");
  require_size(y, w.size(), "y");
  require_positive(y, "y");
  double log_v = (q - 1.0) * std::numbers::ln2 + std::lgamma(q);
  for (std::size_t i = 0; i < y.size(); ++i)
    log_v += 0.5 * q * (static_cast<double>(w.degrees()[i]) - 2.0) * std::log(y[i]);
  for (const Edge& e : w.edges())
    log_v += q * std::log(e.w) + log_bessel_k(q, std::sqrt(y[e.i] * y[e.j]) * e.w);
  return std::exp(log_v);
}

Estimate quad_tree_integral(const WeightMatrix& w, std::span<const double> y, double q) {
  require_desk_scale(w.size());
  require_size(y, w.size(), "y");
  require_positive(y, "y");
  if (!(q > 0.0) || !std::isfinite(q)) throw std::domain_error("tree integral requires q > 0");
  // dx = prod t_m dt_m and det M_x = prod t_m^2, so det^{q-1} dx = prod t_m^{2q-1} dt_m.
  return schur_quadrature(w, LinearLevel{y, 2.0 * q - 1.0});
}

Estimate mc_laplace(const GstzParams& p, std::span<const double> s, const McOptions& options) {
  if (s.size() != p.dim()) throw DimensionError("Laplace argument dimension mismatch");
  for (std::size_t j = 0; j < s.size(); ++j)
    if (!(s[j] > -p.a()[j] * p.a()[j])) throw std::domain_error("Laplace argument must satisfy s_j > -a_j^2");
  const GstzSampler sampler(p);
  return detail::mc_estimate(options, [&] {
    return [&, x = Vector(p.dim())](Rng& rng) mutable {
      sampler.draw(rng, x);
      return std::exp(-dot(s, x));
    };
  });
}

}  // namespace mrig

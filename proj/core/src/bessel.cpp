#include "mrig/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mrig {

namespace {

bool is_half_integer(double q) {
  const double twice = 2.0 * q;
  return twice == std::floor(twice) && std::fmod(twice, 2.0) != 0.0 && q < 1e3;
}

// K_q(z) * e^z * sqrt(2z/pi) for q = m + 1/2, by upward recurrence.
double scaled_half_integer(double q, double z) {
  double km = 1.0;              // order 1/2
  double k = 1.0 + 1.0 / z;     // order 3/2
  if (q == 0.5) return km;
  for (double nu = 1.5; nu < q; nu += 1.0) {
    const double next = km + (2.0 * nu / z) * k;
    km = k;
    k = next;
  }
  return k;
}

}  // namespace

namespace detail {

double log_bessel_k_quadrature(double q, double z) {
  // K_q(z) = (1/2) int_R exp(q v - z cosh v) dv.  The exponent is concave with
  // its maximum at v* = asinh(q/z); sum outward from v* until terms vanish.
  const double vstar = std::asinh(q / z);
  const double peak = q * vstar - z * std::cosh(vstar);
  auto term = [&](double v) { return std::exp(q * v - z * std::cosh(v) - peak); };
  constexpr double kCutoff = 1e-20;

  auto grid_sum = [&](double origin, double h) {
    double s = term(origin);
    for (double v = origin + h;; v += h) {
      const double t = term(v);
      s += t;
      if (t < kCutoff * s && v > vstar) break;
    }
    for (double v = origin - h;; v -= h) {
      const double t = term(v);
      s += t;
      if (t < kCutoff * s && v < vstar) break;
    }
    return s;
  };

  double h = 0.5;
  double integral = h * grid_sum(vstar, h);
  for (int level = 0; level < 12; ++level) {
    const double refined = 0.5 * integral + 0.5 * h * grid_sum(vstar + 0.5 * h, h);
    const bool done = std::abs(refined - integral) <= 1e-15 * refined;
    integral = refined;
    h *= 0.5;
    if (done && level >= 1) break;
  }
  return peak + std::log(0.5 * integral);
}

}  // namespace detail

double log_bessel_k(double q, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw std::domain_error("bessel_k: argument must be positive and finite");
  if (!std::isfinite(q)) throw std::domain_error("bessel_k: order must be finite");
  q = std::abs(q);
  if (is_half_integer(q)) {
    const double scaled = scaled_half_integer(q, z);
    if (std::isfinite(scaled)) return std::log(scaled) + 0.5 * std::log(std::numbers::pi / (2.0 * z)) - z;
  }
  return detail::log_bessel_k_quadrature(q, z);
}

double bessel_k(double q, double z) { return std::exp(log_bessel_k(q, z)); }

}  // namespace mrig

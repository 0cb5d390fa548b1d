#include "mrig/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mrig/bessel.hpp"

namespace mrig {

namespace {

void require_ab(double a, double b) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("parameter a must be positive and finite");
  if (!(b >= 0.0) || !std::isfinite(b)) throw std::domain_error("parameter b must be nonnegative and finite");
}

void require_laplace_domain(double a, double s) {
  if (!(s > -a * a)) throw std::domain_error("Laplace argument must satisfy s > -a^2");
}

// log Phi(-z), usable far into the tail.
double log_normal_upper_tail(double z) {
  const double t = z / std::numbers::sqrt2;
  if (t < 25.0) return std::log(0.5 * std::erfc(t));
  // erfc(t) ~ exp(-t^2) / (t sqrt(pi)) * (1 - 1/(2t^2) + 3/(4t^4))
  const double inv = 1.0 / (t * t);
  return -t * t - std::log(2.0 * t * std::sqrt(std::numbers::pi)) + std::log1p(-0.5 * inv + 0.75 * inv * inv);
}

}  // namespace

void validate(const GigParams& p) {
  require_ab(p.a, p.b);
  if (!std::isfinite(p.q)) throw std::domain_error("GIG shape q must be finite");
  if (p.b == 0.0 && !(p.q > 0.0)) throw std::domain_error("GIG with b = 0 requires q > 0");
}

double gig_log_normalizer(const GigParams& p) {
  validate(p);
  if (p.b == 0.0) return 2.0 * p.q * std::log(p.a) - std::lgamma(p.q);
  return -(std::numbers::ln2 + p.q * std::log(p.b / (2.0 * p.a)) + log_bessel_k(p.q, p.a * p.b));
}

double gig_log_density(const GigParams& p, double x) {
  if (!(x > 0.0)) throw std::domain_error("GIG density is supported on x > 0");
  return gig_log_normalizer(p) - p.a * p.a * x - p.b * p.b / (4.0 * x) + (p.q - 1.0) * std::log(x);
}

double ig_laplace(double a, double b, double s) {
  require_ab(a, b);
  require_laplace_domain(a, s);
  return std::exp(b * (a - std::sqrt(a * a + s)));
}

double rig_laplace(double a, double b, double s) {
  require_ab(a, b);
  require_laplace_domain(a, s);
  const double r = std::sqrt(a * a + s);
  return a / r * std::exp(b * (a - r));
}

UnivariateMoments rig_moments(double a, double b) {
  require_ab(a, b);
  const double a2 = a * a;
  return {(a * b + 1.0) / (2.0 * a2), (a * b + 2.0) / (4.0 * a2 * a2)};
}

UnivariateMoments ig_moments(double a, double b) {
  require_ab(a, b);
  return {b / (2.0 * a), b / (4.0 * a * a * a)};
}

double ig_cdf(double a, double b, double x) {
  require_ab(a, b);
  if (b == 0.0) throw std::domain_error("IG requires b > 0");
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  // Mean mu = b/(2a), shape lambda = b^2/2, so 2 lambda / mu = 2ab.
  const double mu = b / (2.0 * a);
  const double lambda = 0.5 * b * b;
  const double r = std::sqrt(lambda / x);
  const double first = 0.5 * std::erfc(-r * (x / mu - 1.0) / std::numbers::sqrt2);
  const double second = std::exp(2.0 * a * b + log_normal_upper_tail(r * (x / mu + 1.0)));
  return std::min(1.0, first + second);
}

double rig_cdf(double a, double b, double x) {
  require_ab(a, b);
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (b == 0.0) return std::erf(a * std::sqrt(x));
  // 1/X ~ IG(b/2, 2a)
  return 1.0 - ig_cdf(0.5 * b, 2.0 * a, 1.0 / x);
}

double sample_gamma_half(double rate, Rng& rng) {
  if (!(rate > 0.0)) throw std::domain_error("Gamma rate must be positive");
  const double z = standard_normal(rng);
  return z * z / (2.0 * rate);
}

double sample_ig(double a, double b, Rng& rng) {
  require_ab(a, b);
  if (b == 0.0) throw std::domain_error("IG requires b > 0");
  const double mu = b / (2.0 * a);
  const double lambda = 0.5 * b * b;
  const double nu = standard_normal(rng);
  const double phi = mu * nu * nu / (2.0 * lambda);
  // Smaller root of the transform, written without cancellation.
  const double x = mu / (1.0 + phi + std::sqrt(phi * (phi + 2.0)));
  const double u = uniform_open(rng);
  return u <= mu / (mu + x) ? x : mu * mu / x;
}

double sample_rig(double a, double b, Rng& rng) {
  require_ab(a, b);
  const double g = sample_gamma_half(a * a, rng);
  return b > 0.0 ? g + sample_ig(a, b, rng) : g;
}

}  // namespace mrig

#pragma once

#include "mrig/random.hpp"

namespace mrig {

/// GIG(a, b, q): density C exp(-a^2 x - b^2/(4x)) x^{q-1} on (0, inf).
/// IG(a, b) is GIG(a, b, -1/2), RIG(a, b) is GIG(a, b, 1/2), and b = 0 gives
/// Gamma(q, rate a^2).  IG(a, b) is pinned by its Laplace transform
/// exp(b (a - sqrt(a^2 + s))).
struct GigParams {
  double a;
  double b;
  double q;
};

inline GigParams ig_params(double a, double b) { return {a, b, -0.5}; }
inline GigParams rig_params(double a, double b) { return {a, b, 0.5}; }

/// Requires a > 0 and b >= 0, and either b > 0 or q > 0.
void validate(const GigParams& p);
/// log C, the log normalizing constant.
double gig_log_normalizer(const GigParams& p);
double gig_log_density(const GigParams& p, double x);

double ig_laplace(double a, double b, double s);
double rig_laplace(double a, double b, double s);

struct UnivariateMoments {
  double mean;
  double variance;
};

/// ((ab + 1) / (2a^2), (ab + 2) / (4a^4))
UnivariateMoments rig_moments(double a, double b);
/// (b / (2a), b / (4a^3))
UnivariateMoments ig_moments(double a, double b);

double ig_cdf(double a, double b, double x);
double rig_cdf(double a, double b, double x);

/// Gamma(1/2, rate): Z^2 / (2 rate).
double sample_gamma_half(double rate, Rng& rng);
/// Transform method with one normal and one uniform draw; mean b/(2a), shape b^2/2.
double sample_ig(double a, double b, Rng& rng);
/// Gamma(1/2, a^2) + IG(a, b); the IG part is dropped when b = 0.
double sample_rig(double a, double b, Rng& rng);

}  // namespace mrig

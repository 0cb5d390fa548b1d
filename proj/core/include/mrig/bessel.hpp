#pragma once

namespace mrig {

/// MacDonald function K_q(z) = (1/2) int_0^inf u^{q-1} exp(-(z/2)(u + 1/u)) du,
/// z > 0, any real q.  Half-integer orders use the terminating series (upward
/// recurrence from K_{1/2}); other orders are integrated on the real line
/// after u = e^v with a step-halving trapezoidal rule, which converges
/// geometrically for this integrand.
double bessel_k(double q, double z);

/// log K_q(z); finite where K_q(z) itself would under- or overflow.
double log_bessel_k(double q, double z);

namespace detail {
/// Generic (quadrature) path, exposed so tests can compare it with the
/// half-integer closed forms.
double log_bessel_k_quadrature(double q, double z);
}  // namespace detail

}  // namespace mrig

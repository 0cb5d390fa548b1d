#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "mrig/cone.hpp"
#include "mrig/matrix.hpp"
#include "mrig/random.hpp"
#include "mrig/weight_matrix.hpp"

namespace mrig {

/// Parameters (a, b, W) of the multivariate reciprocal inverse Gaussian law
/// P(a; b, W), whose density on C_W is
///
///   (2/pi)^{n/2} prod_j a_j e^{a_j b_j}
///     * exp(-(1/2) a^T M_x a - (1/2) b^T M_x^{-1} b) / sqrt(det M_x).
///
/// Every exponent involving W uses the edge sum sum_{i<j} w_ij u_i v_j, which
/// equals (1/2) u^T W v; see WeightMatrix::half_form.
class GstzParams {
 public:
  /// Throws std::invalid_argument unless a > 0, b >= 0 and all sizes agree.
  GstzParams(Vector a, Vector b, WeightMatrix w);

  std::size_t dim() const noexcept { return a_.size(); }
  const Vector& a() const noexcept { return a_; }
  const Vector& b() const noexcept { return b_; }
  const WeightMatrix& weights() const noexcept { return w_; }

 private:
  Vector a_;
  Vector b_;
  WeightMatrix w_;
};

/// Log density; -infinity outside the open cone (including its boundary).
double log_density(const GstzParams& p, std::span<const double> x);
double log_density(const GstzParams& p, const ConePoint& x);

/// G(a; b, W) = (pi/2)^{n/2} prod_j e^{-a_j b_j} / a_j * exp(-sum_{i<j} w_ij a_i a_j),
/// the mass of exp(-sum_j x_j a_j^2) under mu(b, W).
double normalizer(const GstzParams& p);
double log_normalizer(const GstzParams& p);

/// E exp(-<s, X>) = G(sqrt(a^2 + s); b, W) / G(a; b, W), for s_j > -a_j^2.
double laplace(const GstzParams& p, std::span<const double> s);

struct GstzMoments {
  Vector mean;
  Matrix cov;
};

/// Margins are RIG(a_k, b_k + sum_j w_kj a_j); Cov(X_i, X_j) = -w_ij / (4 a_i a_j).
GstzMoments moments(const GstzParams& p);

/// Law of (X_1..X_k): P(a_1..a_k; b_1..b_k + W[0:k, k:n] a[k:n], W_k).
GstzParams marginalize(const GstzParams& p, std::size_t keep);

/// Given X_1..X_k = head, X_tail - shift ~ tail.
struct ConditionalResult {
  GstzParams tail;
  Vector shift;
};

/// With C = W[0:k, k:n] and Q = C^T M_head^{-1} C:
///   alpha = a_tail, beta = b_tail + C^T M_head^{-1} b_head,
///   shift = diag(Q) / 2, W_tilde = W_tail + offdiag(Q).
/// The shift is half the diagonal of Q because the diagonal of M is 2x.
ConditionalResult condition(const GstzParams& p, const ConePoint& head);

/// X + Y for independent Y_i ~ IG(a_i, b'_i): P(a; b + b', W).
GstzParams convolve_ig(const GstzParams& p, std::span<const double> b_prime);

/// Relabels vertices: result vertex i is vertex order[i] of p.
GstzParams permuted(const GstzParams& p, std::span<const std::size_t> order);

/// Exact sequential sampler.  X_1 is drawn from its RIG margin; each further
/// coordinate is the conditional shift (1/2) c^T M^{-1} c plus an RIG draw
/// whose b-parameter comes from the marginal law of the leading block.  The
/// Cholesky factor of M_x is extended one row per coordinate, so every draw
/// lies in C_W by construction.
class GstzSampler {
 public:
  explicit GstzSampler(GstzParams p);

  const GstzParams& params() const noexcept { return p_; }
  void draw(Rng& rng, std::span<double> out) const;
  Vector draw(Rng& rng) const;

 private:
  GstzParams p_;
  std::vector<Vector> marginal_b_;  // marginal_b_[m] = b-vector of the law of X_1..X_{m+1}
};

/// `count` draws from a single generator, one per row.
Matrix sample(const GstzParams& p, Rng& rng, std::size_t count);

/// `count` draws split into chunks of kChunkSize; chunk k uses
/// make_stream(seed, k).  Output is identical for every thread count.
Matrix sample_streams(const GstzParams& p, std::uint64_t seed, std::size_t count, unsigned threads = 1);

}  // namespace mrig

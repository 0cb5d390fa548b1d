#include "mrig/gstz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mrig/errors.hpp"
#include "mrig/univariate.hpp"

namespace mrig {

GstzParams::GstzParams(Vector a, Vector b, WeightMatrix w) : a_(std::move(a)), b_(std::move(b)), w_(std::move(w)) {
  if (a_.size() != b_.size() || a_.size() != w_.size())
    throw DimensionError("a, b and W must have the same dimension");
  if (a_.empty()) throw DimensionError("dimension must be at least 1");
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (!(a_[j] > 0.0) || !std::isfinite(a_[j]))
      throw std::invalid_argument("a[" + std::to_string(j) + "] must be positive and finite");
    if (!(b_[j] >= 0.0) || !std::isfinite(b_[j]))
      throw std::invalid_argument("b[" + std::to_string(j) + "] must be nonnegative and finite");
  }
}

double log_density(const GstzParams& p, const ConePoint& x) {
  const std::size_t n = p.dim();
  if (x.size() != n) throw DimensionError("point dimension does not match the parameters");
  const Vector& a = p.a();
  const Vector& b = p.b();
  double log_const = 0.5 * static_cast<double>(n) * std::log(2.0 / std::numbers::pi);
  double linear = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    log_const += std::log(a[j]) + a[j] * b[j];
    linear += x.x()[j] * a[j] * a[j];
  }
  // (1/2) a^T M_x a = sum_j x_j a_j^2 - sum_{i<j} w_ij a_i a_j
  const double a_form = linear - p.weights().half_form(a, a);
  const Vector lb = x.chol().forward(b);
  const double b_form = dot(lb, lb);
  return log_const - a_form - 0.5 * b_form - 0.5 * x.log_det();
}

double log_density(const GstzParams& p, std::span<const double> x) {
  auto r = ConePoint::test(p.weights(), x);
  if (std::holds_alternative<ConeRejection>(r)) return -std::numeric_limits<double>::infinity();
  return log_density(p, std::get<ConePoint>(r));
}

double log_normalizer(const GstzParams& p) {
  const Vector& a = p.a();
  const Vector& b = p.b();
  double s = 0.5 * static_cast<double>(p.dim()) * std::log(std::numbers::pi / 2.0);
  for (std::size_t j = 0; j < p.dim(); ++j) s -= a[j] * b[j] + std::log(a[j]);
  return s - p.weights().half_form(a, a);
}

double normalizer(const GstzParams& p) { return std::exp(log_normalizer(p)); }

double laplace(const GstzParams& p, std::span<const double> s) {
  const std::size_t n = p.dim();
  if (s.size() != n) throw DimensionError("Laplace argument dimension mismatch");
  const Vector& a = p.a();
  const Vector& b = p.b();
  Vector r(n);
  double log_value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(s[j] > -a[j] * a[j])) throw std::domain_error("Laplace argument must satisfy s_j > -a_j^2");
    r[j] = std::sqrt(a[j] * a[j] + s[j]);
    log_value += b[j] * (a[j] - r[j]) + std::log(a[j] / r[j]);
  }
  log_value += p.weights().half_form(a, a) - p.weights().half_form(r, r);
  return std::exp(log_value);
}

GstzMoments moments(const GstzParams& p) {
  const std::size_t n = p.dim();
  const Vector& a = p.a();
  const Matrix& w = p.weights().dense();
  const Vector wa = w * a;
  GstzMoments m{Vector(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const auto rig = rig_moments(a[k], p.b()[k] + wa[k]);
    m.mean[k] = rig.mean;
    m.cov(k, k) = rig.variance;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) m.cov(k, j) = -w(k, j) / (4.0 * a[k] * a[j]);
  }
  return m;
}

GstzParams marginalize(const GstzParams& p, std::size_t keep) {
  const std::size_t n = p.dim();
  if (keep < 1 || keep > n) throw std::out_of_range("marginalize: keep must satisfy 1 <= k <= n");
  const Vector& a = p.a();
  const Matrix& w = p.weights().dense();
  Vector head_a(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(keep));
  Vector head_b(p.b().begin(), p.b().begin() + static_cast<std::ptrdiff_t>(keep));
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = keep; j < n; ++j) head_b[i] += w(i, j) * a[j];
  return GstzParams(std::move(head_a), std::move(head_b), p.weights().leading(keep));
}

ConditionalResult condition(const GstzParams& p, const ConePoint& head) {
  const std::size_t n = p.dim();
  const std::size_t k = head.size();
  if (k < 1 || k >= n) throw std::out_of_range("condition: head dimension must satisfy 1 <= k < n");
  // Re-certify against W_k; a ConePoint built for another matrix is rejected here.
  const ConePoint h = ConePoint::make(p.weights().leading(k), head.x());
  const std::size_t m = n - k;
  const Matrix& w = p.weights().dense();
  const Matrix cross = w.block(0, k, k, m);
  const Matrix minv_cross = h.inv() * cross;  // k x m
  const Matrix q = cross.transposed() * minv_cross;

  Vector alpha(p.a().begin() + static_cast<std::ptrdiff_t>(k), p.a().end());
  Vector beta(p.b().begin() + static_cast<std::ptrdiff_t>(k), p.b().end());
  const Vector head_b(p.b().begin(), p.b().begin() + static_cast<std::ptrdiff_t>(k));
  const Vector minv_b = h.inv() * head_b;
  Vector shift(m);
  Matrix w_tilde(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < k; ++r) beta[i] += cross(r, i) * minv_b[r];
    beta[i] = std::max(beta[i], 0.0);
    shift[i] = 0.5 * q(i, i);
    for (std::size_t j = i + 1; j < m; ++j) {
      // M_head^{-1} >= 0 entrywise, so Q >= 0; clip rounding noise.
      const double v = std::max(0.0, w(k + i, k + j) + 0.5 * (q(i, j) + q(j, i)));
      w_tilde(i, j) = v;
      w_tilde(j, i) = v;
    }
  }
  return {GstzParams(std::move(alpha), std::move(beta), WeightMatrix::from_dense(w_tilde)), std::move(shift)};
}

GstzParams convolve_ig(const GstzParams& p, std::span<const double> b_prime) {
  if (b_prime.size() != p.dim()) throw DimensionError("b' dimension mismatch");
  Vector b = p.b();
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!(b_prime[j] > 0.0) || !std::isfinite(b_prime[j]))
      throw std::invalid_argument("convolve_ig: b' entries must be positive");
    b[j] += b_prime[j];
  }
  return GstzParams(p.a(), std::move(b), p.weights());
}

GstzParams permuted(const GstzParams& p, std::span<const std::size_t> order) {
  if (order.size() != p.dim()) throw DimensionError("permutation size mismatch");
  std::vector<bool> seen(p.dim(), false);
  Vector a(p.dim()), b(p.dim());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= p.dim() || seen[order[i]]) throw std::invalid_argument("not a permutation");
    seen[order[i]] = true;
    a[i] = p.a()[order[i]];
    b[i] = p.b()[order[i]];
  }
  return GstzParams(std::move(a), std::move(b), p.weights().principal(order));
}

GstzSampler::GstzSampler(GstzParams p) : p_(std::move(p)) {
  const std::size_t n = p_.dim();
  marginal_b_.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) marginal_b_.push_back(marginalize(p_, m).b());
}

void GstzSampler::draw(Rng& rng, std::span<double> out) const {
  const std::size_t n = p_.dim();
  if (out.size() != n) throw DimensionError("sampler output size mismatch");
  const Vector& a = p_.a();
  const Matrix& w = p_.weights().dense();

  // Rows of the Cholesky factor of M_x, grown one coordinate at a time.
  Matrix lower(n, n);
  Vector u(n), v(n);
  auto positive_rig = [&](double aa, double bb) {
    for (;;) {
      const double z = sample_rig(aa, bb, rng);
      if (z > 0.0) return z;
    }
  };

  const double x0 = positive_rig(a[0], marginal_b_[0][0]);
  out[0] = x0;
  lower(0, 0) = std::sqrt(2.0 * x0);

  for (std::size_t m = 1; m < n; ++m) {
    const Vector& bm = marginal_b_[m];
    // u = L^{-1} c and v = L^{-1} B_head on the leading m x m block.
    for (std::size_t i = 0; i < m; ++i) {
      double su = w(i, m);
      double sv = bm[i];
      for (std::size_t r = 0; r < i; ++r) {
        su -= lower(i, r) * u[r];
        sv -= lower(i, r) * v[r];
      }
      u[i] = su / lower(i, i);
      v[i] = sv / lower(i, i);
    }
    double uu = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      uu += u[i] * u[i];
      uv += u[i] * v[i];
    }
    const double z = positive_rig(a[m], std::max(0.0, bm[m] + uv));
    out[m] = 0.5 * uu + z;
    for (std::size_t i = 0; i < m; ++i) lower(m, i) = -u[i];
    lower(m, m) = std::sqrt(2.0 * z);
  }
}

Vector GstzSampler::draw(Rng& rng) const {
  Vector x(p_.dim());
  draw(rng, x);
  return x;
}

Matrix sample(const GstzParams& p, Rng& rng, std::size_t count) {
  const GstzSampler sampler(p);
  Matrix out(count, p.dim());
  for (std::size_t r = 0; r < count; ++r) sampler.draw(rng, out.row(r));
  return out;
}

Matrix sample_streams(const GstzParams& p, std::uint64_t seed, std::size_t count, unsigned threads) {
  const GstzSampler sampler(p);
  Matrix out(count, p.dim());
  for_each_chunk(count, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    Rng rng = make_stream(seed, chunk);
    for (std::size_t r = begin; r < end; ++r) sampler.draw(rng, out.row(r));
  });
  return out;
}

}  // namespace mrig

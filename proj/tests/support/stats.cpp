#include "stats.hpp"

#include <algorithm>
#include <cmath>

namespace mrig::testing {

double ks_one_sample(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  std::vector<double> f(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) f[i] = cdf(sorted[i]);
  return ks_one_sample_cumulative(sorted, f);
}

double ks_one_sample_cumulative(std::span<const double> sorted, std::span<const double> cdf_values) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf_values[i];
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

MeanEstimate mean_with_se(std::span<const double> v) {
  const double n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

MeanEstimate covariance_with_se(const Matrix& x, std::size_t i, std::size_t j) {
  const std::vector<double> ci = column(x, i);
  const std::vector<double> cj = column(x, j);
  const double mi = mean_with_se(ci).mean;
  const double mj = mean_with_se(cj).mean;
  std::vector<double> prod(ci.size());
  for (std::size_t k = 0; k < ci.size(); ++k) prod[k] = (ci[k] - mi) * (cj[k] - mj);
  MeanEstimate e = mean_with_se(prod);
  const double n = static_cast<double>(ci.size());
  e.mean *= n / (n - 1.0);
  return e;
}

std::vector<double> column(const Matrix& x, std::size_t j) {
  std::vector<double> c(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) c[i] = x(i, j);
  return c;
}

}  // namespace mrig::testing

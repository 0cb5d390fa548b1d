#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mrig/matrix.hpp"

namespace mrig::testing {

// Kolmogorov-Smirnov statistics.  `sorted` must be ascending.
double ks_one_sample(std::span<const double> sorted, const std::function<double(double)>& cdf);
double ks_one_sample_cumulative(std::span<const double> sorted, std::span<const double> cdf_values);
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct MeanEstimate {
  double mean;
  double se;
};

MeanEstimate mean_with_se(std::span<const double> v);

// Sample covariance of columns i, j of `x` with the standard error of the
// estimate, sd((X_i - mean_i)(X_j - mean_j)) / sqrt(N).
MeanEstimate covariance_with_se(const Matrix& x, std::size_t i, std::size_t j);

std::vector<double> column(const Matrix& x, std::size_t j);

}  // namespace mrig::testing

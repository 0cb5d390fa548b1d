#pragma once

#include <span>
#include <variant>
#include <vector>

#include "mrig/weight_matrix.hpp"

namespace mrig {

// W = c (J_n - I_n).
struct CompleteGraph {
  double c;
};

// Star with center 0 and leaves 1..m; w_{0i} = c[i-1].
struct Daisy {
  std::vector<double> c;
};

using SpecialGraph = std::variant<CompleteGraph, Daisy>;

WeightMatrix complete_graph(std::size_t n, double c);
WeightMatrix daisy(std::span<const double> c);
WeightMatrix path_graph(std::span<const double> weights);

/// det M_x in closed form:
///   complete: prod_i (c + 2x_i) * (1 - sum_i c / (c + 2x_i))
///   daisy:    2^m x_1...x_m (2x_0 - sum_i c_i^2 / (2x_i))
/// For the daisy, x[0] is the center.
double closed_form_det(const SpecialGraph& kind, std::span<const double> x);

}  // namespace mrig

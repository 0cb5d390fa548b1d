#include "mrig/special_graphs.hpp"

#include <stdexcept>

#include "mrig/errors.hpp"

namespace mrig {

WeightMatrix complete_graph(std::size_t n, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("complete graph weight must be positive");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, c});
  return WeightMatrix::build(n, edges);
}

WeightMatrix daisy(std::span<const double> c) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c.size(); ++i) edges.push_back({0, i + 1, c[i]});
  return WeightMatrix::build(c.size() + 1, edges);
}

WeightMatrix path_graph(std::span<const double> weights) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < weights.size(); ++i) edges.push_back({i, i + 1, weights[i]});
  return WeightMatrix::build(weights.size() + 1, edges);
}

double closed_form_det(const SpecialGraph& kind, std::span<const double> x) {
  if (const auto* g = std::get_if<CompleteGraph>(&kind)) {
    if (!(g->c > 0.0)) throw std::invalid_argument("complete graph weight must be positive");
    double prod = 1.0;
    double sum = 0.0;
    for (double xi : x) {
      prod *= g->c + 2.0 * xi;
      sum += g->c / (g->c + 2.0 * xi);
    }
    return prod * (1.0 - sum);
  }
  const auto& d = std::get<Daisy>(kind);
  if (x.size() != d.c.size() + 1) throw DimensionError("daisy point must have one coordinate per vertex");
  double prod = 1.0;
  double center = 2.0 * x[0];
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    if (!(d.c[i] > 0.0)) throw std::invalid_argument("daisy weights must be positive");
    prod *= 2.0 * x[i + 1];
    center -= d.c[i] * d.c[i] / (2.0 * x[i + 1]);
  }
  return prod * center;
}

}  // namespace mrig

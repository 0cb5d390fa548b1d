#include <benchmark/benchmark.h>

#include <vector>

#include "mrig/bessel.hpp"
#include "mrig/gstz.hpp"
#include "mrig/integrals.hpp"
#include "mrig/special_graphs.hpp"

using namespace mrig;

namespace {

GstzParams complete_model(std::size_t n) {
  return GstzParams(Vector(n, 1.0), Vector(n, 0.5), complete_graph(n, 0.5));
}

void BM_LogDensity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GstzParams p = complete_model(n);
  const Vector x(n, 0.5 * static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(log_density(p, x));
}
BENCHMARK(BM_LogDensity)->Arg(2)->Arg(8)->Arg(32);

void BM_SamplerDraw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GstzSampler sampler(complete_model(n));
  Rng rng = make_stream(1, 0);
  Vector out(n);
  for (auto _ : state) {
    sampler.draw(rng, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_SamplerDraw)->Arg(2)->Arg(8)->Arg(32);

void BM_BesselK(benchmark::State& state) {
  const double q = static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(bessel_k(q, 1.7));
}
BENCHMARK(BM_BesselK)->Arg(2)->Arg(3)->Arg(10);

void BM_QuadStz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightMatrix w = complete_graph(n, 0.7);
  const Vector y(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(quad_stz_lhs(w, y).value);
}
BENCHMARK(BM_QuadStz)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mrig/integrals.hpp"
#include "mrig/random.hpp"

namespace mrig::detail {

struct RunningMean {
  double mean = 0.0;
  double m2 = 0.0;
  double count = 0.0;

  void add(double v) {
    count += 1.0;
    const double d = v - mean;
    mean += d / count;
    m2 += d * (v - mean);
  }

  void merge(const RunningMean& o) {
    if (o.count == 0.0) return;
    const double total = count + o.count;
    const double d = o.mean - mean;
    mean += d * o.count / total;
    m2 += o.m2 + d * d * count * o.count / total;
    count = total;
  }
};

// Mean of i.i.d. draws with its standard error.  `make_draw()` is called once
// per chunk and returns a callable double(Rng&) owning any scratch state.
// Chunks are merged in index order, so the result is independent of threads.
template <class MakeDraw>
Estimate mc_estimate(const McOptions& options, MakeDraw make_draw) {
  if (options.samples < 2) throw std::invalid_argument("Monte Carlo needs at least two samples");
  const std::size_t chunks = (options.samples + kChunkSize - 1) / kChunkSize;
  std::vector<RunningMean> parts(chunks);
  for_each_chunk(options.samples, options.threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Rng rng = make_stream(options.seed, c);
    auto draw = make_draw();
    RunningMean acc;
    for (std::size_t i = begin; i < end; ++i) acc.add(draw(rng));
    parts[c] = acc;
  });
  RunningMean total;
  for (const auto& p : parts) total.merge(p);
  Estimate e;
  e.value = total.mean;
  e.error = std::sqrt(total.m2 / (total.count - 1.0) / total.count);
  e.evals = options.samples;
  e.method = EstimateMethod::MonteCarlo;
  return e;
}

}  // namespace mrig::detail

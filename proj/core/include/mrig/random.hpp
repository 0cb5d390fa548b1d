#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

namespace mrig {

using Rng = std::mt19937_64;

/// Independent generator for substream `stream` of master seed `seed`.
/// Identical (seed, stream) pairs always produce identical sequences.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

double standard_normal(Rng& rng);
/// Uniform on the open interval (0, 1).
double uniform_open(Rng& rng);

/// Samples per Monte Carlo chunk.  Chunk k always uses make_stream(seed, k),
/// so results do not depend on how chunks are spread over threads.
inline constexpr std::size_t kChunkSize = 1u << 14;

/// Thread count from an explicit request, else the MRIG_THREADS environment
/// variable, else 1.
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

/// Calls `body(chunk, begin, end)` for every chunk of [0, total), spreading
/// chunks over `threads` workers.  `body` must only touch per-chunk state.
void for_each_chunk(std::size_t total, unsigned threads,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace mrig

// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <vector>

#include "quditlab/rng.hpp"

namespace quditlab {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

inline constexpr std::int64_t kMcChunk = 4096;

// Deterministic chunked Monte Carlo mean: chunk c runs on rng.split(c) and
// partial sums are reduced in chunk order, so the estimate depends on
// (samples, seed) only, never on the thread count.
template <typename SampleFn>
McEstimate chunked_mc(std::int64_t samples, RngStream rng, int threads,
                      SampleFn&& sample) {
  if (samples < 2) throw std::invalid_argument("mc: needs at least 2 samples");
  struct ChunkStats {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  const std::int64_t chunks = (samples + kMcChunk - 1) / kMcChunk;
  std::vector<ChunkStats> stats(chunks);

  auto run_chunk = [&](std::int64_t c) {
    RngStream local = rng.split(static_cast<std::uint64_t>(c));
    std::int64_t lo = c * kMcChunk;
    std::int64_t hi = std::min(samples, lo + kMcChunk);
    ChunkStats st;
    for (std::int64_t i = lo; i < hi; ++i) {
      double x = sample(local);
      st.sum += x;
      st.sum_sq += x * x;
    }
    return st;
  };

  if (threads <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) stats[c] = run_chunk(c);
  } else {
    std::vector<std::future<void>> pool;
    std::atomic<std::int64_t> next{0};
    for (int t = 0; t < threads; ++t) {
      pool.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          std::int64_t c = next.fetch_add(1);
          if (c >= chunks) return;
          stats[c] = run_chunk(c);
        }
      }));
    }
    for (auto& f : pool) f.get();
  }

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& st : stats) {
    sum += st.sum;
    sum_sq += st.sum_sq;
  }
  McEstimate est;
  est.samples = samples;
  est.mean = sum / static_cast<double>(samples);
  double var = (sum_sq - static_cast<double>(samples) * est.mean * est.mean) /
               static_cast<double>(samples - 1);
  est.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
  return est;
}

}  // namespace quditlab

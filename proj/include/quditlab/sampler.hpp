// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "quditlab/matrix.hpp"
#include "quditlab/povm.hpp"
#include "quditlab/rng.hpp"

namespace quditlab {

// Outcome density for true state phi under the covariant POVM from seed X:
// the unnormalized density over Haar-distributed u is
//   p(u) = <psi psi| X |psi psi>,  psi = u^dag phi,
// which covers both pair cases (for conjugate pairs the partial transpose
// moves from the effect onto the seed and cancels against the conjugated
// second copy). Rejection sampling with envelope lambda_max(case effect).
struct SamplerContext {
  int d = 0;
  MeasCase meas_case = MeasCase::parallel;
  Mat effect0;        // X for parallel, PT(X) for conjugate
  double envelope;    // lambda_max(effect0)
  std::vector<cxd> phi;
};

SamplerContext make_sampler(const SeedOperator& s, MeasCase c,
                            const std::vector<cxd>& phi);

struct OutcomeDraw {
  Mat u;              // accepted outcome label
  double score;       // |<0| u^dag |phi>|^2, the estimation fidelity
  int proposals = 0;  // Haar draws consumed for this acceptance
};

OutcomeDraw sample_outcome(const SamplerContext& ctx, RngStream& rng);

struct SimulationResult {
  int d = 0;
  MeasCase meas_case = MeasCase::parallel;
  std::int64_t accepted = 0;
  std::int64_t proposals = 0;
  double acceptance_rate = 0.0;
  double mean = 0.0;       // sample mean of the score
  double std_error = 0.0;
  double exact = 0.0;      // Tr[X M] for comparison
};

// Draw `accepted` outcomes for Haar-random true states and average the score.
// Chunked per 4096 acceptances; byte-identical across thread counts.
SimulationResult simulate(const SeedOperator& s, MeasCase c,
                          std::int64_t accepted, RngStream rng, int threads = 1);

}  // namespace quditlab

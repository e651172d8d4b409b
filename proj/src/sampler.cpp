// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include "quditlab/sampler.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "quditlab/eig.hpp"
#include "quditlab/fidelity.hpp"
#include "quditlab/mc.hpp"
#include "quditlab/symmetric.hpp"

namespace quditlab {

namespace {

// psi x psi for parallel pairs, psi x conj(psi) for conjugate pairs.
std::vector<cxd> pair_vector(const std::vector<cxd>& psi, MeasCase c) {
  const int d = static_cast<int>(psi.size());
  std::vector<cxd> v(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cxd second = c == MeasCase::parallel ? psi[j] : std::conj(psi[j]);
      v[static_cast<std::size_t>(i) * d + j] = psi[i] * second;
    }
  }
  return v;
}

double outcome_density(const SamplerContext& ctx, const std::vector<cxd>& psi) {
  std::vector<cxd> v = pair_vector(psi, ctx.meas_case);
  double p = inner(v, mat_vec(ctx.effect0, v)).real();
  // A valid effect keeps the density inside [0, envelope] up to roundoff.
  if (p < -1e-9 * ctx.envelope || p > ctx.envelope * (1.0 + 1e-9)) {
    throw std::runtime_error("sampler: density escaped the rejection envelope");
  }
  return std::min(std::max(p, 0.0), ctx.envelope);
}

}  // namespace

SamplerContext make_sampler(const SeedOperator& s, MeasCase c,
                            const std::vector<cxd>& phi) {
  const int d = s.d;
  if (static_cast<int>(phi.size()) != d) {
    throw std::invalid_argument("make_sampler: phi has wrong dimension");
  }
  if (std::abs(norm(phi) - 1.0) > 1e-8) {
    throw std::invalid_argument("make_sampler: phi is not normalized");
  }
  double tr = std::abs(trace(s.op).real() - static_cast<double>(d) * d);
  double sw = std::abs(trace_product(s.op, swap_matrix(d)).real() - d);
  if (tr > 1e-8 || sw > 1e-8) {
    throw std::invalid_argument(
        "make_sampler: seed violates completeness, density would not normalize");
  }

  SamplerContext ctx;
  ctx.d = d;
  ctx.meas_case = c;
  ctx.effect0 = case_effect(s, c);
  ctx.envelope = max_eigenvalue(ctx.effect0);
  ctx.phi = phi;
  if (!(ctx.envelope > 0.0)) {
    throw std::invalid_argument("make_sampler: degenerate envelope");
  }
  return ctx;
}

OutcomeDraw sample_outcome(const SamplerContext& ctx, RngStream& rng) {
  OutcomeDraw draw;
  for (;;) {
    if (++draw.proposals > 1000000) {
      throw std::runtime_error("sampler: rejection loop stalled");
    }
    Mat u = haar_unitary(ctx.d, rng);
    std::vector<cxd> psi = mat_vec(dagger(u), ctx.phi);
    double p = outcome_density(ctx, psi);
    if (rng.uniform() * ctx.envelope < p) {
      draw.u = u;
      draw.score = std::norm(psi[0]);
      return draw;
    }
  }
}

SimulationResult simulate(const SeedOperator& s, MeasCase c,
                          std::int64_t accepted, RngStream rng, int threads) {
  if (accepted < 2) throw std::invalid_argument("simulate: needs >= 2 samples");
  // Envelope and completeness guard once, with a placeholder direction.
  std::vector<cxd> e0(s.d, cxd(0.0, 0.0));
  e0[0] = 1.0;
  SamplerContext base = make_sampler(s, c, e0);

  std::atomic<std::int64_t> proposals{0};
  McEstimate est =
      chunked_mc(accepted, rng, threads, [&](RngStream& local) {
        SamplerContext ctx = base;
        ctx.phi = haar_state(ctx.d, local);
        OutcomeDraw draw = sample_outcome(ctx, local);
        proposals.fetch_add(draw.proposals, std::memory_order_relaxed);
        return draw.score;
      });

  SimulationResult res;
  res.d = s.d;
  res.meas_case = c;
  res.accepted = est.samples;
  res.proposals = proposals.load();
  res.acceptance_rate =
      static_cast<double>(res.accepted) / static_cast<double>(res.proposals);
  res.mean = est.mean;
  res.std_error = est.std_error;
  res.exact = mean_fidelity(s);
  return res;
}

}  // namespace quditlab

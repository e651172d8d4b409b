// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quditlab/fidelity.hpp"
#include "quditlab/povm.hpp"

namespace quditlab {

struct OptimizerConfig {
  int restarts = 20;
  std::uint64_t seed = 0x5EEDC0DEULL;
  int penalty_rounds = 5;
  double penalty_start = 1e3;    // multiplied by 10 each round
  int max_iterations = 250;      // Nelder-Mead iterations, final round
  int threads = 1;               // restarts are independent; reduced in order
  bool freeze_off_diagonal = false;  // pin gamma = delta = 0 (restriction runs)
};

struct OptimizationResult {
  int d = 0;
  MeasCase meas_case = MeasCase::parallel;
  SeedParams best;
  double fidelity = 0.0;
  double min_eig = 0.0;          // of the case effect at the optimum
  double trace_residual = 0.0;
  double swap_residual = 0.0;
  double dist_f_parallel = 0.0;  // fidelity - 3/(d+2)
  double dist_f_local = 0.0;
  double dist_f_perp = 0.0;
  std::int64_t evaluations = 0;
  int restarts = 0;
  std::vector<std::string> flags;
};

// Maximize mean_fidelity over the seed family restricted to the completeness
// variety (beta eliminated) subject to case positivity, via multistart
// Nelder-Mead with an escalating penalty on negative eigenvalues, then a
// boundary polish. Deterministic for fixed config.
OptimizationResult optimize_seed(int d, MeasCase c, const OptimizerConfig& cfg = {});

struct VerifyLine {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  std::string sense;  // ">=" or "<=", with tolerance on the bound
  bool ok = false;
};

struct VerifyReport {
  bool ok = false;
  std::vector<VerifyLine> lines;
};

// Independent feasibility audit of an optimizer result: completeness residuals
// plus the closed-form block inequalities for the relevant case.
VerifyReport verify_result(const OptimizationResult& r, double tol = 1e-8);

}  // namespace quditlab

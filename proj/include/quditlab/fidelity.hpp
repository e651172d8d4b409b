// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quditlab/channel.hpp"
#include "quditlab/matrix.hpp"
#include "quditlab/povm.hpp"
#include "quditlab/rng.hpp"

namespace quditlab {

// Second-moment operator M on C^d x C^d: the Haar average of
// |<u phi_0 | . >|^2-weighted score against the seed, so that
// mean_fidelity(X) = Tr[X M]. Equals the three-copy symmetric projector with
// the third slot pinned to |0> on both sides, divided by bose_dim(d, 3).
Mat moment_operator(int d);

// Mean estimation fidelity of the covariant POVM generated by seed X.
double mean_fidelity(const SeedOperator& s);
double mean_fidelity(const SeedOperator& s, const Mat& moment);

// Closed form on family parameters; matches Tr[X M] for family members.
double mean_fidelity_params(int d, const SeedParams& p);

// Haar Monte Carlo cross-check of mean_fidelity. Chunked; thread-count
// independent.
McEstimate mean_fidelity_mc(const SeedOperator& s, std::int64_t samples,
                            RngStream rng, int threads = 1);

// Closed-form benchmark fidelities:
//   f_parallel = 3 / (d + 2)
//   f_local    = 2(1+2d)/((1+d)(2+d)) - (d-1)(sqrt(1+d)-1)^2 / (d^2 (1+d))
//   f_perp     = (2 + sqrt(2d/(d+1))) / (d + 2)
struct ClosedForms {
  int d = 0;
  double f_parallel = 0.0;
  double f_local = 0.0;
  double f_perp = 0.0;
  std::vector<std::string> flags;  // disagreements with the published table
};

ClosedForms closed_forms(int d);

struct PublishedRow {
  double f_parallel = 0.0;
  double f_local = 0.0;
  double f_perp = 0.0;
};

// Four-decimal values from the published benchmark table.
const std::map<int, PublishedRow>& published_table();

struct McPair {
  McEstimate parallel;  // seed: case_one_opt
  McEstimate local;     // seed: psi_local
};

struct Table1Row {
  ClosedForms closed;
  std::optional<McPair> mc;  // attached for small d when sampling is enabled
};

struct Table1Config {
  std::vector<int> d_list = {2, 3, 4, 5, 6, 11, 17};
  std::int64_t mc_samples = 100000;
  int mc_max_d = 4;
  std::uint64_t seed = 0x5EEDC0DEULL;
  int threads = 1;
};

std::vector<Table1Row> table1(const Table1Config& cfg);

}  // namespace quditlab

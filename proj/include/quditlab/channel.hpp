// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "quditlab/matrix.hpp"
#include "quditlab/mc.hpp"
#include "quditlab/rng.hpp"

namespace quditlab {

// Channel from n symmetric copies of a d-level system to one d-level output.
// Kraus operators act on symmetric coordinates: each is d x bose_dim(d, n).
struct KrausChannel {
  int d = 0;
  int n = 0;
  std::vector<Mat> kraus;
};

struct ChannelResiduals {
  double tp = 0.0;  // || sum A^dag A - I ||_max
  double cp = 0.0;  // max(0, -lambda_min(Choi))
};

// Choi operator sum_k vec(A_k) vec(A_k)^dag with the output factor first.
Mat choi_matrix(const KrausChannel& ch);

ChannelResiduals validate_channel(const KrausChannel& ch);

// Kraus set from a PSD Choi operator (eigenvectors scaled by sqrt(lambda)),
// followed by a right polish X -> X S^{-1/2} so the set is exactly
// trace preserving even when the Choi only satisfies TP to solver precision.
KrausChannel choi_to_kraus(const Mat& choi, int d, int n);

// rho_sym is the input state on symmetric coordinates.
Mat apply_channel(const KrausChannel& ch, const Mat& rho_sym);

// Supremum of the mean conjugate-state fidelity over all channels from n
// symmetric copies: (n + 1) / (n + d).
double estimation_bound(int d, int n);

// Mean fidelity between the channel output on |phi>^{x n} and the conjugate
// state |conj(phi)>, averaged over Haar-random phi. Evaluated in closed form
// by contracting the lifted Kraus set against a symmetric projector.
double conjugation_fidelity(const KrausChannel& ch);

// Monte Carlo cross-check of conjugation_fidelity. Chunked sampling: the
// estimate depends only on (samples, rng seed), never on thread count.
McEstimate conjugation_fidelity_mc(const KrausChannel& ch, std::int64_t samples,
                                   RngStream rng, int threads = 1);

// Channel attaining estimation_bound(d, n), built from the top eigenspace of
// the scaled (n+1)-copy symmetric projector.
KrausChannel optimal_conjugator(int d, int n);

// Haar-ish random channel: isometry into d x (kraus_count) via a Ginibre
// matrix orthonormalized by MGS; requires kraus_count * d >= bose_dim(d, n).
KrausChannel random_channel(int d, int n, int kraus_count, RngStream& rng);

KrausChannel identity_channel(int d);              // n = 1
KrausChannel constant_channel(int d, int n);       // output fixed at |0><0|

}  // namespace quditlab

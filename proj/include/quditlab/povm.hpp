// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quditlab/matrix.hpp"
#include "quditlab/rng.hpp"

namespace quditlab {

enum class MeasCase { parallel, conjugate };

MeasCase parse_case(const std::string& s);
std::string case_name(MeasCase c);

// Generalized Gell-Mann basis for d x d Hermitian traceless matrices,
// ordered: for each pair m < n the symmetric then antisymmetric off-diagonal
// generator, then the d-1 diagonal ones l = 1..d-1 with
// sqrt(2/(l(l+1))) (sum_{j<l} |j><j| - l |l><l|). Tr[g_i g_j] = 2 delta_ij.
std::vector<Mat> gellmann_basis(int d);

// Unnormalized generators used by the seed constructor:
//   t3        = diag(1-d, 1, ..., 1)
//   t1[m][n]  = |m><n| + |n><m|
//   t2[m][n]  = -i |m><n| + i |n><m|
//   t3_pair   = |m><m| - |n><n|
struct GeneratorSet {
  int d = 0;
  Mat t3;
  std::vector<Mat> t1_0m, t2_0m;            // pairs (0, m), m = 1..d-1
  std::vector<std::pair<int, int>> pairs;   // (m, n), 1 <= m < n <= d-1
  std::vector<Mat> t1_mn, t2_mn, t3_mn;     // aligned with `pairs`
};

GeneratorSet build_generators(int d);

struct SeedParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

// Covariant-measurement seed on C^d x C^d:
//   X = I + alpha (t3 x I + I x t3) + beta t3 x t3
//       + gamma sum_m (t1_0m x t1_0m + t2_0m x t2_0m)
//       + delta sum_{m<n} (t1_mn x t1_mn + t2_mn x t2_mn
//                          + (2/(d-1)) t3_mn x t3_mn).
// The delta term is the SU(d-1) quadratic Casimir on the diagonal-pair
// sector; the 2/(d-1) normalization is what makes the closed-form
// completeness condition below exact. In the |ij> basis X is block diagonal:
// a 1x1 block at |00>, 2x2 blocks on {|0m>, |m0>} with coupling 2*gamma, and
// 2x2 blocks on {|mn>, |nm>} (1 <= m < n) with coupling 2*delta. At d = 2
// the delta sector is empty and delta must be 0.
struct SeedOperator {
  int d = 0;
  std::optional<SeedParams> params;  // set when X is a family member
  Mat op;                            // d^2 x d^2
};

SeedOperator build_seed(int d, const SeedParams& p);
SeedOperator seed_from_matrix(int d, const Mat& x);

// Parameter tuples of the two benchmark family members. At d = 2 delta is
// pinned to 0 (empty sector).
SeedParams case_one_opt_params(int d);
SeedParams psi_local_params(int d);

// The four parameter directions as matrices: X = I + alpha*B_a + beta*B_b
// + gamma*B_g + delta*B_d.
std::array<Mat, 4> family_terms(int d);

// Recover (alpha, beta, gamma, delta) if x lies in the family; nullopt if
// the distance from the family exceeds tol.
std::optional<SeedParams> solve_family_params(const Mat& x, int d, double tol = 1e-9);

Mat swap_matrix(int d);

// Two-copy twirl of X in closed form: a*I + b*SWAP with a, b fixed by Tr[X]
// and Tr[X SWAP].
Mat exact_twirl(const Mat& x, int d);

// Completeness means the covariant POVM built from X resolves the identity:
// equivalently Tr[X] = d^2 and Tr[X SWAP] = d.
struct CompletenessResidual {
  double trace = 0.0;      // |Tr X - d^2|
  double swap = 0.0;       // |Tr[X SWAP] - d|
  double twirl_mc = 0.0;   // max-abs gap between sampled twirl and closed form
};

CompletenessResidual completeness_residual(const SeedOperator& s, int trials,
                                           RngStream rng);

// For parameters on the completeness variety: beta solved from the linear
// condition beta*d*(d-1) + 4*gamma*(d-1) + 2*delta*d*(d-2) = 0.
double beta_for_completeness(int d, double gamma, double delta);

// Smallest eigenvalue of the case effect: X itself for parallel pairs, the
// partial transpose on the second factor for conjugate pairs.
double positivity_margin(const SeedOperator& s, MeasCase c);
Mat case_effect(const SeedOperator& s, MeasCase c);

// Block-diagonal data of a family member in the |ij> basis:
//   a00 = <00|X|00> = 1 + 2a(1-d) + b(1-d)^2
//   c   = <0m|X|0m> = 1 + a(2-d) + b(1-d)
//   s   = 1 + 2a + b
//   h   = <mm|X|mm> = s + 2 delta (d-2)/(d-1)
//   e   = <mn|X|mn> = s - 2 delta / (d-1)   (m != n, both >= 1)
// (h and e fall back to s at d = 2 where those sectors are empty or bare.)
struct FamilyBlocks {
  double a00 = 0.0, c = 0.0, s = 0.0, h = 0.0, e = 0.0;
};

FamilyBlocks family_blocks(int d, const SeedParams& p);

// Closed-form smallest eigenvalue of the case effect of build_seed(d, p):
//   parallel : min(a00, c - 2|gamma|, h, e - 2|delta|)
//   conjugate: min(c, e, mu-) with mu- the smaller eigenvalue of
//              [[a00, 2 gamma sqrt(d-1)], [2 gamma sqrt(d-1), e + 2 delta (d-1)]].
// Equals min_eigenvalue(case_effect(...)) and costs O(1).
double family_min_eig(int d, const SeedParams& p, MeasCase c);

// Named reference operators:
//  "case_one_opt"  optimal parallel-pair seed,
//  "psi_local"     conjugate seed matching the best local-strategy fidelity,
//  "psi_perp"      printed candidate kept for diagnostics (fails completeness),
//  "identity"      X = I (uninformative POVM).
SeedOperator reference_operator(const std::string& name, int d);
std::vector<std::string> reference_operator_names();

// Expansion X = w I + sum_m r_m (g_m x I) + sum_m s_m (I x g_m)
//              + sum_mn t_mn (g_m x g_n) over the basis above.
struct HermitianExpansion {
  double w = 0.0;
  std::vector<double> r;
  std::vector<double> s;
  Mat t;  // (d^2-1) x (d^2-1), real entries
};

HermitianExpansion hermitian_expand(const Mat& x, int d);
Mat hermitian_reconstruct(const HermitianExpansion& e, int d);

// Largest commutator norm max_abs(X W - W X), W = u x u, over sampled
// elements u = e^{i theta} |0><0| (+) u' of the subgroup fixing |0>: u' is
// Haar on the complement and theta = -arg det(u'). Family members commute
// with every W; the residual is O(1) otherwise. Note that at d = 2 the
// subgroup is diagonal, so any diagonal X has residual 0.
double stabilizer_covariance_residual(const Mat& x, int d, int trials,
                                      RngStream rng);

}  // namespace quditlab

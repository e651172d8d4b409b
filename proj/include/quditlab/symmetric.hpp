// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "quditlab/matrix.hpp"
#include "quditlab/rng.hpp"

namespace quditlab {

// Dimension of the n-fold symmetric subspace of (C^d)^{x n}: C(n+d-1, n).
std::uint64_t bose_dim(int d, int n);

// Occupation vectors (n_0..n_{d-1}), sum = n, in lexicographically
// descending order, so (n, 0, ..., 0) comes first.
std::vector<std::vector<int>> occupation_list(int d, int n);

// Isometry V: symmetric coordinates -> (C^d)^{x n}. Column b holds the
// normalized symmetrized basis state for occupation_list(d, n)[b]; entries
// are real, sqrt(prod_i n_i! / n!) on each matching product-basis row.
struct SymBasis {
  int d = 0;
  int n = 0;
  std::vector<std::vector<int>> occupations;
  Mat isometry;  // d^n x bose_dim(d, n)

  SymBasis(int d, int n);

  // Row index of the product-basis state with letters `word` (size n).
  int word_index(const std::vector<int>& word) const;
};

// Projector V V^dag onto the symmetric subspace, d^n x d^n.
Mat sym_projector(int d, int n);

// Same projector built by averaging all n! permutation operators. Exponential
// in n; used as an independent cross-check for small n.
Mat sym_projector_by_permutations(int d, int n);

// Haar average of |phi><phi|^{x k} = P_sym / bose_dim(d, k).
Mat haar_state_average(int d, int k);

std::vector<cxd> haar_state(int d, RngStream& rng);
Mat ginibre(int rows, int cols, RngStream& rng);

// Modified Gram-Schmidt over columns, two passes per column; the input must
// have full column rank. R has a positive real diagonal, which pins the
// phase convention for the unitary below.
Mat mgs_orthonormal_columns(const Mat& g);

// Haar unitary via Ginibre + modified Gram-Schmidt.
Mat haar_unitary(int d, RngStream& rng);

// k-fold tensor power of a d x d matrix.
Mat kron_power(const Mat& u, int k);

}  // namespace quditlab

// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "quditlab/matrix.hpp"

namespace quditlab {

struct EigResult {
  std::vector<double> values;  // ascending
  Mat vectors;                 // column k pairs with values[k]
};

// Full spectral decomposition of a Hermitian matrix. The complex problem is
// embedded as a real symmetric one of twice the size and solved with cyclic
// Jacobi sweeps; each eigenvalue of the embedding appears twice and the pairs
// collapse back to one complex eigenvector apiece.
EigResult hermitian_eigs(const Mat& h);

// Eigenvalues only; skips eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const Mat& h);

double min_eigenvalue(const Mat& h);
double max_eigenvalue(const Mat& h);

// V diag(f(lambda)) V^dag for a Hermitian input.
Mat hermitian_function(const Mat& h, double (*f)(double));

}  // namespace quditlab

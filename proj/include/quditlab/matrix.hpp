// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace quditlab {

using cxd = std::complex<double>;

// Dense row-major complex matrix. Everything in this library is at most a few
// hundred rows, so the implementation favors clarity over cache blocking.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<cxd> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  cxd& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const cxd& operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static Mat identity(int n);
  static Mat zero(int r, int c) { return Mat(r, c); }
};

Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Mat& x, const Mat& y);
Mat operator*(cxd s, const Mat& x);
Mat operator*(double s, const Mat& x);
Mat& operator+=(Mat& x, const Mat& y);

Mat transpose(const Mat& x);
Mat conjugate(const Mat& x);
Mat dagger(const Mat& x);
cxd trace(const Mat& x);
cxd trace_product(const Mat& x, const Mat& y);  // Tr[x y] without forming x*y
double fro_norm(const Mat& x);
double max_abs(const Mat& x);
double max_abs_diff(const Mat& x, const Mat& y);
bool is_hermitian(const Mat& x, double tol);

Mat kron(const Mat& x, const Mat& y);

// Flatten row by row: vec(|i><j|) lands at index i*cols+j, so the first
// tensor factor of vec-space is the row (output) index.
std::vector<cxd> vec(const Mat& x);
Mat unvec(const std::vector<cxd>& v, int rows, int cols);
Mat outer(const std::vector<cxd>& u, const std::vector<cxd>& v);  // u v^dag

// Trace out the tensor factors not listed in `keep` (indices into `dims`,
// ascending). Factor 0 is the leftmost (most significant) index.
Mat partial_trace(const Mat& x, const std::vector<int>& dims,
                  const std::vector<int>& keep);

// Transpose the second factor of a d1*d2-dimensional bipartite operator.
Mat partial_transpose_second(const Mat& x, int d1, int d2);

std::vector<cxd> mat_vec(const Mat& x, const std::vector<cxd>& v);
cxd inner(const std::vector<cxd>& u, const std::vector<cxd>& v);  // <u|v>
double norm(const std::vector<cxd>& v);

// Max-abs residuals of the four vectorization identities, for a: in -> out,
// m acting on the output space and n on the input space:
//   [0]  (m x n)|a>> = |m a n^T>>
//   [1]  trace over the input factor of |a>><<b|  = a b^dag
//   [2]  trace over the output factor of |a>><<b| = a^T conj(b)
//   [3]  Tr[a m1 a^dag m2] = Tr[|a>><<a| (m2 x m1^T)]
// (m1 on the input space, m2 on the output space).
std::array<double, 4> vec_identity_residuals(const Mat& m, const Mat& n,
                                             const Mat& a, const Mat& b);

}  // namespace quditlab

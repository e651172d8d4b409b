// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include "quditlab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace quditlab {

namespace {

// Cyclic Jacobi on a dense real symmetric matrix, in place. Rotations are
// accumulated into v when it is non-null. Stops when the off-diagonal
// Frobenius norm drops below 1e-13 of the matrix scale.
void jacobi_sweeps(std::vector<double>& s, int n, std::vector<double>* v) {
  auto S = [&](int i, int j) -> double& {
    return s[static_cast<std::size_t>(i) * n + j];
  };
  if (v) {
    v->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*v)[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  double fro = 0.0;
  for (double x : s) fro += x * x;
  fro = std::sqrt(fro);
  const double stop = 1e-13 * std::max(fro, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off2 = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off2 += 2.0 * S(p, q) * S(p, q);
    if (std::sqrt(off2) <= stop) return;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = S(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (S(q, q) - S(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = S(k, p), akq = S(k, q);
          S(k, p) = c * akp - sn * akq;
          S(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = S(p, k), aqk = S(q, k);
          S(p, k) = c * apk - sn * aqk;
          S(q, k) = sn * apk + c * aqk;
        }
        if (v) {
          for (int k = 0; k < n; ++k) {
            auto& vkp = (*v)[static_cast<std::size_t>(k) * n + p];
            auto& vkq = (*v)[static_cast<std::size_t>(k) * n + q];
            double a = vkp, b = vkq;
            vkp = c * a - sn * b;
            vkq = sn * a + c * b;
          }
        }
      }
    }
  }
  throw std::runtime_error("jacobi eigensolver did not converge");
}

void check_square_hermitian(const Mat& h) {
  if (h.rows != h.cols) throw std::invalid_argument("eig: matrix not square");
  double tol = 1e-8 * std::max(1.0, max_abs(h));
  if (!is_hermitian(h, tol)) throw std::invalid_argument("eig: matrix not hermitian");
}

// Real symmetric embedding of a Hermitian matrix: [[Re, -Im], [Im, Re]].
// Every eigenvalue of h shows up twice; a real eigenvector [x; y] maps back
// to the complex eigenvector x + i y.
std::vector<double> embed(const Mat& h) {
  const int n = h.rows;
  const int m = 2 * n;
  std::vector<double> s(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = h(i, j).real();
      double im = h(i, j).imag();
      s[static_cast<std::size_t>(i) * m + j] = re;
      s[static_cast<std::size_t>(i) * m + j + n] = -im;
      s[static_cast<std::size_t>(i + n) * m + j] = im;
      s[static_cast<std::size_t>(i + n) * m + j + n] = re;
    }
  return s;
}

std::vector<std::pair<double, int>> sorted_diagonal(const std::vector<double>& s,
                                                    int m) {
  std::vector<std::pair<double, int>> out(m);
  for (int i = 0; i < m; ++i) out[i] = {s[static_cast<std::size_t>(i) * m + i], i};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Mat& h) {
  check_square_hermitian(h);
  const int n = h.rows;
  if (n == 0) return {};
  std::vector<double> s = embed(h);
  jacobi_sweeps(s, 2 * n, nullptr);
  auto diag = sorted_diagonal(s, 2 * n);
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = 0.5 * (diag[2 * i].first + diag[2 * i + 1].first);
  return values;
}

EigResult hermitian_eigs(const Mat& h) {
  check_square_hermitian(h);
  const int n = h.rows;
  EigResult res;
  if (n == 0) return res;
  const int m = 2 * n;
  std::vector<double> s = embed(h);
  std::vector<double> v;
  jacobi_sweeps(s, m, &v);
  auto diag = sorted_diagonal(s, m);

  res.values.resize(n);
  for (int i = 0; i < n; ++i)
    res.values[i] = 0.5 * (diag[2 * i].first + diag[2 * i + 1].first);
  res.vectors = Mat(n, n);

  double scale = 0.0;
  for (auto& p : diag) scale = std::max(scale, std::abs(p.first));
  const double cluster_tol = 1e-9 * std::max(1.0, scale);

  auto column_as_complex = [&](int col) {
    std::vector<cxd> out(n);
    for (int r = 0; r < n; ++r)
      out[r] = cxd(v[static_cast<std::size_t>(r) * m + col],
                   v[static_cast<std::size_t>(r + n) * m + col]);
    return out;
  };

  // The doubled spectrum is processed cluster by cluster: the complex images
  // of a cluster's 2k real eigenvectors span exactly k dimensions (their
  // complex Gram has eigenvalues 0 and 2, k of each), so modified
  // Gram-Schmidt keeps exactly half.
  std::size_t i = 0;
  int out_col = 0;
  while (i < diag.size()) {
    std::size_t j = i + 1;
    while (j < diag.size() && diag[j].first - diag[j - 1].first <= cluster_tol) ++j;
    if ((j - i) % 2 == 1) {
      if (j < diag.size()) ++j;
      else throw std::runtime_error("eig: unpaired embedded eigenvalue");
    }
    std::vector<std::vector<cxd>> accepted;
    for (std::size_t k = i; k < j; ++k) {
      std::vector<cxd> w = column_as_complex(diag[k].second);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& acc : accepted) {
          cxd proj = inner(acc, w);
          for (int r = 0; r < n; ++r) w[r] -= proj * acc[r];
        }
      double nr = norm(w);
      if (nr > 1e-5) {
        for (auto& z : w) z /= nr;
        accepted.push_back(std::move(w));
      }
    }
    if (accepted.size() != (j - i) / 2) {
      throw std::runtime_error("eig: eigenvector recovery failed");
    }
    for (const auto& w : accepted) {
      for (int r = 0; r < n; ++r) res.vectors(r, out_col) = w[r];
      ++out_col;
    }
    i = j;
  }
  return res;
}

double min_eigenvalue(const Mat& h) { return hermitian_eigenvalues(h).front(); }

double max_eigenvalue(const Mat& h) { return hermitian_eigenvalues(h).back(); }

Mat hermitian_function(const Mat& h, double (*f)(double)) {
  EigResult e = hermitian_eigs(h);
  const int n = h.rows;
  Mat out(n, n);
  for (int k = 0; k < n; ++k) {
    double fk = f(e.values[k]);
    if (fk == 0.0) continue;
    for (int r = 0; r < n; ++r) {
      cxd vk = e.vectors(r, k) * fk;
      for (int c = 0; c < n; ++c) out(r, c) += vk * std::conj(e.vectors(c, k));
    }
  }
  return out;
}

}  // namespace quditlab

// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include "quditlab/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace quditlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_dn(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("bad (d, n)");
}

}  // namespace

std::uint64_t bose_dim(int d, int n) {
  check_dn(d, n);
  // C(n + d - 1, n) built incrementally to stay in integers.
  std::uint64_t r = 1;
  for (int i = 1; i <= d - 1; ++i) {
    r = r * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::vector<std::vector<int>> occupation_list(int d, int n) {
  check_dn(d, n);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d, 0);
  // Depth-first over letters, largest count in slot 0 first: lexicographically
  // descending overall.
  struct Rec {
    int d, n;
    std::vector<int>* cur;
    std::vector<std::vector<int>>* out;
    void go(int slot, int left) {
      if (slot == d - 1) {
        (*cur)[slot] = left;
        out->push_back(*cur);
        return;
      }
      for (int k = left; k >= 0; --k) {
        (*cur)[slot] = k;
        go(slot + 1, left - k);
      }
    }
  } rec{d, n, &cur, &out};
  rec.go(0, n);
  return out;
}

SymBasis::SymBasis(int d_, int n_) : d(d_), n(n_) {
  check_dn(d, n);
  occupations = occupation_list(d, n);
  const int dim_full = static_cast<int>(std::pow(static_cast<double>(d), n) + 0.5);
  const int dim_sym = static_cast<int>(occupations.size());
  isometry = Mat(dim_full, dim_sym);

  const double nfact = factorial(n);
  // Walk every length-n word once; each contributes to exactly one column.
  std::vector<int> word(n, 0);
  for (int row = 0; row < dim_full; ++row) {
    int x = row;
    for (int p = n - 1; p >= 0; --p) {
      word[p] = x % d;
      x /= d;
    }
    std::vector<int> occ(d, 0);
    for (int p = 0; p < n; ++p) ++occ[word[p]];
    auto it = std::lower_bound(occupations.begin(), occupations.end(), occ,
                               [](const std::vector<int>& a, const std::vector<int>& b) {
                                 return a > b;  // list is descending
                               });
    int col = static_cast<int>(it - occupations.begin());
    double prod = 1.0;
    for (int k = 0; k < d; ++k) prod *= factorial(occ[k]);
    isometry(row, col) = std::sqrt(prod / nfact);
  }
}

int SymBasis::word_index(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != n) throw std::invalid_argument("word length");
  int idx = 0;
  for (int p = 0; p < n; ++p) {
    if (word[p] < 0 || word[p] >= d) throw std::invalid_argument("word letter");
    idx = idx * d + word[p];
  }
  return idx;
}

Mat sym_projector(int d, int n) {
  SymBasis b(d, n);
  return b.isometry * dagger(b.isometry);
}

Mat sym_projector_by_permutations(int d, int n) {
  check_dn(d, n);
  if (n > 8) throw std::invalid_argument("permutation projector capped at n = 8");
  const int dim = static_cast<int>(std::pow(static_cast<double>(d), n) + 0.5);
  Mat acc(dim, dim);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double count = 0.0;
  std::vector<int> word(n), moved(n);
  do {
    // Permutation operator: |i_perm(0), ..., i_perm(n-1)> <i_0, ..., i_{n-1}|.
    for (int col = 0; col < dim; ++col) {
      int x = col;
      for (int p = n - 1; p >= 0; --p) {
        word[p] = x % d;
        x /= d;
      }
      for (int p = 0; p < n; ++p) moved[p] = word[perm[p]];
      int row = 0;
      for (int p = 0; p < n; ++p) row = row * d + moved[p];
      acc(row, col) += 1.0;
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (1.0 / count) * acc;
}

Mat haar_state_average(int d, int k) {
  return (1.0 / static_cast<double>(bose_dim(d, k))) * sym_projector(d, k);
}

std::vector<cxd> haar_state(int d, RngStream& rng) {
  std::vector<cxd> v(d);
  for (auto& z : v) z = rng.complex_normal();
  double nr = norm(v);
  for (auto& z : v) z /= nr;
  return v;
}

Mat ginibre(int rows, int cols, RngStream& rng) {
  Mat g(rows, cols);
  for (auto& z : g.a) z = rng.complex_normal();
  return g;
}

Mat mgs_orthonormal_columns(const Mat& g) {
  const int rows = g.rows, cols = g.cols;
  Mat q = g;
  for (int j = 0; j < cols; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        cxd proj = 0.0;
        for (int r = 0; r < rows; ++r) proj += std::conj(q(r, i)) * q(r, j);
        for (int r = 0; r < rows; ++r) q(r, j) -= proj * q(r, i);
      }
    }
    double nr = 0.0;
    for (int r = 0; r < rows; ++r) nr += std::norm(q(r, j));
    nr = std::sqrt(nr);
    if (nr < 1e-200) throw std::runtime_error("gram-schmidt: rank deficient");
    for (int r = 0; r < rows; ++r) q(r, j) /= nr;
  }
  return q;
}

Mat haar_unitary(int d, RngStream& rng) {
  return mgs_orthonormal_columns(ginibre(d, d, rng));
}

Mat kron_power(const Mat& u, int k) {
  if (k < 1) throw std::invalid_argument("kron_power needs k >= 1");
  Mat out = u;
  for (int i = 1; i < k; ++i) out = kron(out, u);
  return out;
}

}  // namespace quditlab

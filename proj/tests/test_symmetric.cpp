// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numeric>

#include <doctest.h>

#include "quditlab/matrix.hpp"
#include "quditlab/rng.hpp"
#include "quditlab/symmetric.hpp"

using namespace quditlab;

TEST_CASE("bose dimensions") {
  CHECK(bose_dim(2, 2) == 3);
  CHECK(bose_dim(2, 3) == 4);
  CHECK(bose_dim(3, 2) == 6);
  CHECK(bose_dim(3, 3) == 10);
  CHECK(bose_dim(4, 3) == 20);
  CHECK(bose_dim(17, 3) == 969);
  for (int d = 2; d <= 6; ++d) {
    CHECK(bose_dim(d, 0) == 1);
    CHECK(bose_dim(d, 1) == static_cast<std::uint64_t>(d));
  }
}

TEST_CASE("occupation lists are complete and ordered") {
  for (auto [d, n] : {std::pair{2, 3}, {3, 2}, {4, 3}}) {
    auto occ = occupation_list(d, n);
    CHECK(occ.size() == bose_dim(d, n));
    std::vector<int> first(d, 0);
    first[0] = n;
    CHECK(occ.front() == first);
    for (std::size_t i = 0; i < occ.size(); ++i) {
      CHECK(std::accumulate(occ[i].begin(), occ[i].end(), 0) == n);
      if (i > 0) CHECK(occ[i - 1] > occ[i]);  // lexicographically descending
    }
  }
}

TEST_CASE("occupation front entry is n in the first slot") {
  auto occ = occupation_list(3, 2);
  CHECK(occ.front() == std::vector<int>{2, 0, 0});
  CHECK(occ.back() == std::vector<int>{0, 0, 2});
}

TEST_CASE("sym basis is an isometry") {
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    SymBasis basis(d, n);
    Mat gram = dagger(basis.isometry) * basis.isometry;
    CHECK(max_abs_diff(gram, Mat::identity(static_cast<int>(bose_dim(d, n)))) <
          1e-12);
  }
}

TEST_CASE("projector is idempotent with trace equal to the subspace size") {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) {
      Mat p = sym_projector(d, n);
      CHECK(max_abs_diff(p * p, p) < 1e-12);
      CHECK(std::abs(trace(p).real() - static_cast<double>(bose_dim(d, n))) <
            1e-12);
      CHECK(max_abs_diff(p, dagger(p)) < 1e-14);
    }
  }
}

TEST_CASE("projector equals the permutation average") {
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    CHECK(max_abs_diff(sym_projector(d, n), sym_projector_by_permutations(d, n)) <
          1e-12);
  }
}

TEST_CASE("projector fixes symmetric products and kills antisymmetric ones") {
  Mat p = sym_projector(2, 2);
  std::vector<cxd> sym = {1.0, 0.5, 0.5, -0.3};       // a|00>+b(|01>+|10>)+c|11>
  std::vector<cxd> anti = {0.0, M_SQRT1_2, -M_SQRT1_2, 0.0};
  auto ps = mat_vec(p, sym);
  for (std::size_t i = 0; i < sym.size(); ++i) CHECK(std::abs(ps[i] - sym[i]) < 1e-14);
  auto pa = mat_vec(p, anti);
  CHECK(norm(pa) < 1e-14);
}

TEST_CASE("haar state average is the normalized projector") {
  CHECK(max_abs_diff(haar_state_average(2, 2),
                     (1.0 / 3.0) * sym_projector(2, 2)) < 1e-14);
  CHECK(max_abs_diff(haar_state_average(3, 1), (1.0 / 3.0) * Mat::identity(3)) <
        1e-14);
}

TEST_CASE("haar states are normalized and fill the space") {
  RngStream rng(21);
  Mat acc = Mat::zero(3, 3);
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    auto phi = haar_state(3, rng);
    CHECK(std::abs(norm(phi) - 1.0) < 1e-12);
    acc += outer(phi, phi);
  }
  CHECK(max_abs_diff((1.0 / trials) * acc, (1.0 / 3.0) * Mat::identity(3)) < 0.01);
}

TEST_CASE("haar unitaries are unitary") {
  RngStream rng(22);
  for (int t = 0; t < 100; ++t) {
    Mat u = haar_unitary(4, rng);
    CHECK(max_abs_diff(dagger(u) * u, Mat::identity(4)) < 1e-12);
  }
}

TEST_CASE("haar unitary moments match the closed form") {
  // E |<0|U|0>|^{2k} = k! (d-1)! / (k+d-1)!
  RngStream rng(23);
  const int samples = 20000;
  for (int d : {2, 3, 4}) {
    double sum[3] = {0, 0, 0}, sum_sq[3] = {0, 0, 0};
    for (int t = 0; t < samples; ++t) {
      Mat u = haar_unitary(d, rng);
      double w = std::norm(u(0, 0));
      double p = 1.0;
      for (int k = 0; k < 3; ++k) {
        p *= w;
        sum[k] += p;
        sum_sq[k] += p * p;
      }
    }
    for (int k = 1; k <= 3; ++k) {
      double expect = 1.0;
      for (int j = 1; j <= k; ++j) expect *= static_cast<double>(j) / (j + d - 1);
      double mean = sum[k - 1] / samples;
      double var = sum_sq[k - 1] / samples - mean * mean;
      double se = std::sqrt(var / samples);
      CHECK(std::abs(mean - expect) < 4.0 * se + 1e-12);
    }
  }
}

TEST_CASE("ginibre entries have unit mean square") {
  RngStream rng(24);
  Mat g = ginibre(40, 40, rng);
  double s = 0.0;
  for (const auto& z : g.a) s += std::norm(z);
  CHECK(std::abs(s / 1600.0 - 1.0) < 0.1);
}

TEST_CASE("gram-schmidt returns orthonormal columns") {
  RngStream rng(25);
  Mat g = ginibre(6, 4, rng);
  Mat q = mgs_orthonormal_columns(g);
  CHECK(max_abs_diff(dagger(q) * q, Mat::identity(4)) < 1e-12);
}

TEST_CASE("kron power") {
  RngStream rng(26);
  Mat u = haar_unitary(2, rng);
  CHECK(max_abs_diff(kron_power(u, 3), kron(u, kron(u, u))) < 1e-13);
  CHECK(max_abs_diff(kron_power(u, 1), u) < 1e-15);
}

TEST_CASE("word index round trips the occupation rows") {
  SymBasis basis(3, 2);
  CHECK(basis.word_index({0, 0}) == 0);
  CHECK(basis.word_index({2, 1}) == 2 * 3 + 1);
  // Column of occupation (1,1,0) connects |01> and |10> with 1/sqrt(2).
  int col = -1;
  for (std::size_t b = 0; b < basis.occupations.size(); ++b) {
    if (basis.occupations[b] == std::vector<int>{1, 1, 0}) col = static_cast<int>(b);
  }
  REQUIRE(col >= 0);
  CHECK(std::abs(basis.isometry(basis.word_index({0, 1}), col) - M_SQRT1_2) < 1e-14);
  CHECK(std::abs(basis.isometry(basis.word_index({1, 0}), col) - M_SQRT1_2) < 1e-14);
}

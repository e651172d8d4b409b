// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "quditlab/eig.hpp"
#include "quditlab/matrix.hpp"
#include "quditlab/povm.hpp"
#include "quditlab/rng.hpp"
#include "quditlab/symmetric.hpp"

using namespace quditlab;

namespace {

SeedParams random_params(int d, RngStream& rng) {
  SeedParams p;
  p.alpha = -1.0 + 2.0 * rng.uniform();
  p.beta = -1.0 + 2.0 * rng.uniform();
  p.gamma = -1.0 + 2.0 * rng.uniform();
  p.delta = d > 2 ? -1.0 + 2.0 * rng.uniform() : 0.0;
  return p;
}

}  // namespace

TEST_CASE("case labels parse and print") {
  CHECK(parse_case("parallel") == MeasCase::parallel);
  CHECK(parse_case("conjugate") == MeasCase::conjugate);
  CHECK(case_name(MeasCase::parallel) == "parallel");
  CHECK(case_name(MeasCase::conjugate) == "conjugate");
  CHECK_THROWS_AS(parse_case("sideways"), std::invalid_argument);
}

TEST_CASE("gellmann basis is orthogonal and traceless") {
  for (int d : {2, 3, 4}) {
    auto basis = gellmann_basis(d);
    CHECK(basis.size() == static_cast<std::size_t>(d * d - 1));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(std::abs(trace(basis[i])) < 1e-14);
      CHECK(max_abs_diff(basis[i], dagger(basis[i])) < 1e-14);
      for (std::size_t j = i; j < basis.size(); ++j) {
        double expect = i == j ? 2.0 : 0.0;
        CHECK(std::abs(trace_product(basis[i], basis[j]).real() - expect) < 1e-13);
      }
    }
  }
}

TEST_CASE("generator set matches its definition") {
  GeneratorSet g = build_generators(3);
  CHECK(g.t3(0, 0).real() == doctest::Approx(-2.0));
  CHECK(g.t3(1, 1).real() == doctest::Approx(1.0));
  CHECK(g.t3(2, 2).real() == doctest::Approx(1.0));
  REQUIRE(g.t1_0m.size() == 2);
  CHECK(g.t1_0m[0](0, 1).real() == doctest::Approx(1.0));
  CHECK(g.t1_0m[0](1, 0).real() == doctest::Approx(1.0));
  CHECK(g.t2_0m[0](0, 1).imag() == doctest::Approx(-1.0));
  CHECK(g.t2_0m[0](1, 0).imag() == doctest::Approx(1.0));
  REQUIRE(g.pairs.size() == 1);
  CHECK(g.pairs[0] == std::pair<int, int>{1, 2});
  CHECK(g.t3_mn[0](1, 1).real() == doctest::Approx(1.0));
  CHECK(g.t3_mn[0](2, 2).real() == doctest::Approx(-1.0));
}

TEST_CASE("seed matrix entries match hand-computed blocks") {
  // d = 3, alpha = 0.1, beta = 0.2: <00|X|00> = 1 + 2(0.1)(-2) + 0.2*4 = 1.4
  SeedParams p{0.1, 0.2, 0.0, 0.0};
  SeedOperator s = build_seed(3, p);
  CHECK(s.op(0, 0).real() == doctest::Approx(1.4).epsilon(1e-14));

  // Parallel-case optimum at d = 2: diag(3, 1/2, 1/2, 0) pattern with
  // coupling -1/2 between |01> and |10>.
  SeedOperator opt = build_seed(2, case_one_opt_params(2));
  CHECK(opt.op(0, 0).real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(opt.op(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(opt.op(2, 2).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(opt.op(3, 3).real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(opt.op(1, 2).real() == doctest::Approx(-0.5).epsilon(1e-14));
  auto vals = hermitian_eigenvalues(opt.op);
  CHECK(vals[3] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(vals[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(vals[1] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("seeds are hermitian and block structured") {
  RngStream rng(41);
  for (int d : {2, 3, 4, 5}) {
    SeedParams p = random_params(d, rng);
    SeedOperator s = build_seed(d, p);
    CHECK(max_abs_diff(s.op, dagger(s.op)) < 1e-13);
    // Off-diagonal couplings live only on the {|ij>, |ji>} pairs.
    for (int i = 0; i < d * d; ++i) {
      for (int j = 0; j < d * d; ++j) {
        int a = i / d, b = i % d, c = j / d, e = j % d;
        if (i == j || (a == e && b == c)) continue;
        CHECK(std::abs(s.op(i, j)) < 1e-13);
      }
    }
    FamilyBlocks blocks = family_blocks(d, p);
    CHECK(s.op(0, 0).real() == doctest::Approx(blocks.a00).epsilon(1e-12));
    CHECK(s.op(1, 1).real() == doctest::Approx(blocks.c).epsilon(1e-12));
    CHECK(s.op(1, d).real() == doctest::Approx(2.0 * p.gamma).epsilon(1e-12));
    if (d > 2) {
      CHECK(s.op(d + 1, d + 1).real() == doctest::Approx(blocks.h).epsilon(1e-12));
      CHECK(s.op(d + 2, d + 2).real() == doctest::Approx(blocks.e).epsilon(1e-12));
      CHECK(s.op(d + 2, 2 * d + 1).real() ==
            doctest::Approx(2.0 * p.delta).epsilon(1e-12));
    }
  }
}

TEST_CASE("delta is rejected when the pair sector is empty") {
  SeedParams p{0.0, 0.0, 0.0, 0.1};
  CHECK_THROWS_AS(build_seed(2, p), std::invalid_argument);
}

TEST_CASE("family parameters are recoverable from the matrix") {
  RngStream rng(42);
  for (int d : {2, 3, 4, 5}) {
    for (int t = 0; t < 10; ++t) {
      SeedParams p = random_params(d, rng);
      SeedOperator s = build_seed(d, p);
      auto q = solve_family_params(s.op, d);
      REQUIRE(q.has_value());
      CHECK(q->alpha == doctest::Approx(p.alpha).epsilon(1e-10));
      CHECK(q->beta == doctest::Approx(p.beta).epsilon(1e-10));
      CHECK(q->gamma == doctest::Approx(p.gamma).epsilon(1e-10));
      CHECK(q->delta == doctest::Approx(p.delta).epsilon(1e-10));
    }
  }
  // A Hermitian matrix off the family is rejected.
  Mat x = Mat::zero(9, 9);
  x(0, 4) = 1.0;
  x(4, 0) = 1.0;
  CHECK(!solve_family_params(x, 3).has_value());
}

TEST_CASE("family terms reproduce the constructor") {
  for (int d : {2, 3}) {
    auto terms = family_terms(d);
    SeedParams p{0.3, -0.2, 0.15, d > 2 ? -0.1 : 0.0};
    Mat x = Mat::identity(d * d) + p.alpha * terms[0] + p.beta * terms[1] +
            p.gamma * terms[2] + p.delta * terms[3];
    CHECK(max_abs_diff(x, build_seed(d, p).op) < 1e-13);
  }
}

TEST_CASE("swap matrix exchanges factors") {
  for (int d : {2, 3}) {
    Mat s = swap_matrix(d);
    CHECK(max_abs_diff(s * s, Mat::identity(d * d)) < 1e-15);
    RngStream rng(43);
    auto u = haar_state(d, rng);
    auto v = haar_state(d, rng);
    std::vector<cxd> uv(d * d), vu(d * d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        uv[i * d + j] = u[i] * v[j];
        vu[i * d + j] = v[i] * u[j];
      }
    }
    auto swapped = mat_vec(s, uv);
    for (int k = 0; k < d * d; ++k) CHECK(std::abs(swapped[k] - vu[k]) < 1e-14);
  }
}

TEST_CASE("completeness conditions for the named operators") {
  RngStream rng(44);
  for (int d : {2, 3, 4}) {
    for (const char* name : {"identity", "case_one_opt", "psi_local"}) {
      SeedOperator s = reference_operator(name, d);
      // The twirl residual is a max over d^4 entries; d=4 needs the trials.
      auto r = completeness_residual(s, 2000, rng.split(d));
      CHECK(r.trace < 1e-12);
      CHECK(r.swap < 1e-12);
      CHECK(r.twirl_mc < 0.2);
    }
  }
}

TEST_CASE("psi_perp is kept for diagnostics but fails completeness") {
  RngStream rng(45);
  double expect_trace[] = {3.732051, 8.174235, 14.324555};
  int idx = 0;
  for (int d : {2, 3, 4}) {
    SeedOperator s = reference_operator("psi_perp", d);
    auto r = completeness_residual(s, 10, rng.split(d));
    CHECK(r.trace == doctest::Approx(expect_trace[idx++]).epsilon(1e-5));
    CHECK(r.swap > 0.1);
  }
}

TEST_CASE("solved beta restores the swap condition") {
  RngStream rng(46);
  for (int d : {2, 3, 4}) {
    for (int t = 0; t < 5; ++t) {
      SeedParams p = random_params(d, rng);
      p.beta = beta_for_completeness(d, p.gamma, p.delta);
      SeedOperator s = build_seed(d, p);
      CHECK(std::abs(trace(s.op).real() - d * d) < 1e-12);
      CHECK(std::abs(trace_product(s.op, swap_matrix(d)).real() - d) < 1e-12);
    }
  }
}

TEST_CASE("exact twirl is the two-copy group average") {
  RngStream rng(47);
  for (int d : {2, 3}) {
    Mat g = ginibre(d * d, d * d, rng);
    Mat x = 0.5 * (g + dagger(g));
    Mat tw = exact_twirl(x, d);
    // Same trace pairings against I and SWAP.
    CHECK(std::abs(trace(tw).real() - trace(x).real()) < 1e-10);
    CHECK(std::abs(trace_product(tw, swap_matrix(d)).real() -
                   trace_product(x, swap_matrix(d)).real()) < 1e-10);
    // Invariant under sampled rotations.
    for (int t = 0; t < 20; ++t) {
      Mat u = haar_unitary(d, rng);
      Mat uu = kron(u, u);
      CHECK(max_abs_diff(uu * tw, tw * uu) < 1e-10);
    }
    // Averaging u x u X (u x u)^dag over many samples approaches the twirl.
    Mat acc = Mat::zero(d * d, d * d);
    const int samples = 3000;
    for (int t = 0; t < samples; ++t) {
      Mat u = haar_unitary(d, rng);
      Mat uu = kron(u, u);
      acc += uu * x * dagger(uu);
    }
    CHECK(max_abs_diff((1.0 / samples) * acc, tw) < 0.15);
  }
}

TEST_CASE("closed-form family spectrum matches the eigensolver") {
  RngStream rng(48);
  for (int d : {2, 3, 4, 5}) {
    for (int t = 0; t < 20; ++t) {
      SeedParams p = random_params(d, rng);
      SeedOperator s = build_seed(d, p);
      for (MeasCase c : {MeasCase::parallel, MeasCase::conjugate}) {
        CHECK(family_min_eig(d, p, c) ==
              doctest::Approx(positivity_margin(s, c)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("case effect applies the partial transpose only when conjugate") {
  SeedOperator s = build_seed(3, SeedParams{0.2, -0.1, 0.3, 0.1});
  CHECK(max_abs_diff(case_effect(s, MeasCase::parallel), s.op) < 1e-15);
  CHECK(max_abs_diff(case_effect(s, MeasCase::conjugate),
                     partial_transpose_second(s.op, 3, 3)) < 1e-15);
}

TEST_CASE("reference operators expose their family parameters") {
  for (int d : {2, 3, 4}) {
    SeedOperator a = reference_operator("case_one_opt", d);
    REQUIRE(a.params.has_value());
    CHECK(a.params->alpha == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(a.params->beta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(a.params->gamma == doctest::Approx(-d / 8.0).epsilon(1e-12));
    CHECK(a.params->delta == doctest::Approx(0.0));
    // The parallel-case effect of the optimum touches zero: the POVM is
    // extremal, not interior.
    CHECK(std::abs(positivity_margin(a, MeasCase::parallel)) < 1e-10);

    SeedOperator b = reference_operator("psi_local", d);
    REQUIRE(b.params.has_value());
    CHECK(std::abs(positivity_margin(b, MeasCase::conjugate)) < 1e-10);
  }
  CHECK_THROWS_AS(reference_operator("unknown", 2), std::invalid_argument);
  CHECK(reference_operator_names().size() == 4);
}

TEST_CASE("psi_local is the partial transpose of a rank-one projector") {
  for (int d : {2, 3, 4}) {
    SeedOperator s = reference_operator("psi_local", d);
    Mat pt = partial_transpose_second(s.op, d, d);
    auto vals = hermitian_eigenvalues(pt);
    for (int k = 0; k < d * d - 1; ++k) CHECK(std::abs(vals[k]) < 1e-10);
    CHECK(vals[d * d - 1] == doctest::Approx(double(d) * d).epsilon(1e-10));
  }
}

TEST_CASE("hermitian expansion round trips") {
  RngStream rng(49);
  for (int d : {2, 3}) {
    Mat g = ginibre(d * d, d * d, rng);
    Mat x = 0.5 * (g + dagger(g));
    HermitianExpansion e = hermitian_expand(x, d);
    CHECK(max_abs_diff(hermitian_reconstruct(e, d), x) < 1e-12);
    // The identity has weight Tr[X]/d^2 and no generator components.
    HermitianExpansion id = hermitian_expand(Mat::identity(d * d), d);
    CHECK(id.w == doctest::Approx(1.0).epsilon(1e-13));
    for (double r : id.r) CHECK(std::abs(r) < 1e-13);
    for (double sline : id.s) CHECK(std::abs(sline) < 1e-13);
    CHECK(max_abs(id.t) < 1e-13);
  }
}

TEST_CASE("family members commute with the stabilizer subgroup") {
  RngStream rng(50);
  for (int d : {2, 3, 4}) {
    SeedOperator s = reference_operator("case_one_opt", d);
    CHECK(stabilizer_covariance_residual(s.op, d, 40, rng.split(d)) < 1e-12);
    SeedOperator l = reference_operator("psi_local", d);
    CHECK(stabilizer_covariance_residual(l.op, d, 40, rng.split(10 + d)) < 1e-12);
  }
}

TEST_CASE("non-covariant operators show a large stabilizer residual") {
  RngStream rng(51);
  // |00><01| breaks covariance already at d = 2.
  Mat x = Mat::zero(4, 4);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  CHECK(stabilizer_covariance_residual(x, 2, 60, rng.split(0)) > 0.5);

  // |01><01| is diagonal, and at d = 2 the stabilizer is diagonal too, so
  // the commutator vanishes identically there; d = 3 detects it.
  Mat y2 = Mat::zero(4, 4);
  y2(1, 1) = 1.0;
  CHECK(stabilizer_covariance_residual(y2, 2, 60, rng.split(1)) == 0.0);
  Mat y3 = Mat::zero(9, 9);
  y3(1, 1) = 1.0;
  CHECK(stabilizer_covariance_residual(y3, 3, 60, rng.split(2)) > 0.5);
}

TEST_CASE("seed_from_matrix validates shape and hermiticity") {
  Mat bad = Mat::zero(4, 4);
  bad(0, 1) = 1.0;  // not hermitian
  CHECK_THROWS_AS(seed_from_matrix(2, bad), std::invalid_argument);
  CHECK_THROWS_AS(seed_from_matrix(3, Mat::identity(4)), std::invalid_argument);
  SeedOperator ok = seed_from_matrix(2, Mat::identity(4));
  REQUIRE(ok.params.has_value());  // identity is the all-zero family member
  CHECK(ok.params->alpha == doctest::Approx(0.0));
}

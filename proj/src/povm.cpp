// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include "quditlab/povm.hpp"

#include <cmath>
#include <stdexcept>

#include "quditlab/eig.hpp"
#include "quditlab/symmetric.hpp"

namespace quditlab {

namespace {

void check_d(int d) {
  if (d < 2) throw std::invalid_argument("seed family needs d >= 2");
}

// Determinant by Gaussian elimination with partial pivoting; sizes here are
// tiny (d - 1 <= 16 or so).
cxd determinant(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  cxd det = 1.0;
  for (int c = 0; c < m.cols; ++c) {
    int piv = c;
    for (int r = c + 1; r < m.rows; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (std::abs(m(piv, c)) < 1e-300) return 0.0;
    if (piv != c) {
      for (int k = 0; k < m.cols; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < m.rows; ++r) {
      cxd f = m(r, c) / m(c, c);
      for (int k = c; k < m.cols; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Mat pair_t1(int d, int m, int n) {
  Mat t(d, d);
  t(m, n) = 1.0;
  t(n, m) = 1.0;
  return t;
}

Mat pair_t2(int d, int m, int n) {
  Mat t(d, d);
  t(m, n) = cxd(0.0, -1.0);
  t(n, m) = cxd(0.0, 1.0);
  return t;
}

}  // namespace

MeasCase parse_case(const std::string& s) {
  if (s == "parallel") return MeasCase::parallel;
  if (s == "conjugate") return MeasCase::conjugate;
  throw std::invalid_argument("unknown measurement case: " + s);
}

std::string case_name(MeasCase c) {
  return c == MeasCase::parallel ? "parallel" : "conjugate";
}

std::vector<Mat> gellmann_basis(int d) {
  check_d(d);
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(d) * d - 1);
  for (int m = 0; m < d; ++m)
    for (int n = m + 1; n < d; ++n) {
      out.push_back(pair_t1(d, m, n));
      out.push_back(pair_t2(d, m, n));
    }
  for (int l = 1; l < d; ++l) {
    Mat t(d, d);
    double norm = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) t(j, j) = norm;
    t(l, l) = -norm * l;
    out.push_back(t);
  }
  return out;
}

GeneratorSet build_generators(int d) {
  check_d(d);
  GeneratorSet g;
  g.d = d;
  g.t3 = Mat(d, d);
  g.t3(0, 0) = 1.0 - d;
  for (int m = 1; m < d; ++m) g.t3(m, m) = 1.0;
  for (int m = 1; m < d; ++m) {
    g.t1_0m.push_back(pair_t1(d, 0, m));
    g.t2_0m.push_back(pair_t2(d, 0, m));
  }
  for (int m = 1; m < d; ++m)
    for (int n = m + 1; n < d; ++n) {
      g.pairs.emplace_back(m, n);
      g.t1_mn.push_back(pair_t1(d, m, n));
      g.t2_mn.push_back(pair_t2(d, m, n));
      Mat t3(d, d);
      t3(m, m) = 1.0;
      t3(n, n) = -1.0;
      g.t3_mn.push_back(t3);
    }
  return g;
}

SeedOperator build_seed(int d, const SeedParams& p) {
  check_d(d);
  if (d == 2 && p.delta != 0.0) {
    throw std::invalid_argument("build_seed: delta must be 0 at d = 2");
  }
  GeneratorSet g = build_generators(d);
  Mat eye = Mat::identity(d);
  Mat x = Mat::identity(d * d);
  x += p.alpha * (kron(g.t3, eye) + kron(eye, g.t3));
  x += p.beta * kron(g.t3, g.t3);
  for (std::size_t m = 0; m < g.t1_0m.size(); ++m) {
    x += p.gamma * (kron(g.t1_0m[m], g.t1_0m[m]) + kron(g.t2_0m[m], g.t2_0m[m]));
  }
  const double casimir = d > 2 ? 2.0 / (d - 1.0) : 0.0;
  for (std::size_t k = 0; k < g.pairs.size(); ++k) {
    x += p.delta * (kron(g.t1_mn[k], g.t1_mn[k]) + kron(g.t2_mn[k], g.t2_mn[k]) +
                    casimir * kron(g.t3_mn[k], g.t3_mn[k]));
  }
  SeedOperator s;
  s.d = d;
  s.params = p;
  s.op = std::move(x);
  return s;
}

SeedOperator seed_from_matrix(int d, const Mat& x) {
  check_d(d);
  if (x.rows != d * d || x.cols != d * d) {
    throw std::invalid_argument("seed_from_matrix: expected d^2 x d^2");
  }
  if (!is_hermitian(x, 1e-10 * std::max(1.0, max_abs(x)))) {
    throw std::invalid_argument("seed_from_matrix: not hermitian");
  }
  SeedOperator s;
  s.d = d;
  s.op = x;
  s.params = solve_family_params(x, d);
  return s;
}

SeedParams case_one_opt_params(int d) {
  check_d(d);
  return {-0.75, 0.5, -static_cast<double>(d) / 8.0, 0.0};
}

SeedParams psi_local_params(int d) {
  check_d(d);
  double rt = std::sqrt(1.0 + d);
  SeedParams p;
  p.alpha = 1.0 / ((1.0 + rt) * (1.0 + rt)) - 1.0;
  p.beta = (4.0 + (d - 2.0) * (static_cast<double>(d) * d + 2.0 * rt)) /
           (static_cast<double>(d) * d * (d - 1.0));
  p.gamma = (2.0 - static_cast<double>(d) * d + (d - 2.0) * rt) / (2.0 * d);
  p.delta = d == 2 ? 0.0 : (rt - 1.0) * (rt - 1.0) / (2.0 * d);
  return p;
}

std::array<Mat, 4> family_terms(int d) {
  check_d(d);
  SeedParams zero;
  Mat eye = Mat::identity(d * d);
  SeedParams pa = zero, pb = zero, pg = zero, pd = zero;
  pa.alpha = 1.0;
  pb.beta = 1.0;
  pg.gamma = 1.0;
  pd.delta = d == 2 ? 0.0 : 1.0;
  return {build_seed(d, pa).op - eye, build_seed(d, pb).op - eye,
          build_seed(d, pg).op - eye, build_seed(d, pd).op - eye};
}

std::optional<SeedParams> solve_family_params(const Mat& x, int d, double tol) {
  check_d(d);
  if (x.rows != d * d || x.cols != d * d) return std::nullopt;
  auto idx = [d](int i, int j) { return i * d + j; };
  SeedParams p;
  p.gamma = 0.5 * x(idx(0, 1), idx(1, 0)).real();
  p.delta = d > 2 ? 0.5 * x(idx(1, 2), idx(2, 1)).real() : 0.0;
  // Diagonal entries |mm> and |0m> pin the remaining two parameters.
  double h = x(idx(1, 1), idx(1, 1)).real();
  double s = h - (d > 2 ? 2.0 * p.delta * (d - 2.0) / (d - 1.0) : 0.0);
  double c = x(idx(0, 1), idx(0, 1)).real();
  p.alpha = ((s - 1.0) * (d - 1.0) + (c - 1.0)) / d;
  p.beta = ((s - 1.0) * (2.0 - d) - 2.0 * (c - 1.0)) / d;
  Mat rebuilt = build_seed(d, p).op;
  double scale = std::max(1.0, max_abs(x));
  if (max_abs_diff(rebuilt, x) > tol * scale) return std::nullopt;
  return p;
}

Mat swap_matrix(int d) {
  check_d(d);
  Mat s(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
  return s;
}

Mat exact_twirl(const Mat& x, int d) {
  check_d(d);
  Mat s = swap_matrix(d);
  double tr = trace(x).real();
  double trs = trace_product(x, s).real();
  double denom = d * (static_cast<double>(d) * d - 1.0);
  double a = (d * tr - trs) / denom;
  double b = (d * trs - tr) / denom;
  return a * Mat::identity(d * d) + b * s;
}

double beta_for_completeness(int d, double gamma, double delta) {
  check_d(d);
  return -(4.0 * gamma * (d - 1.0) + 2.0 * delta * d * (d - 2.0)) /
         (static_cast<double>(d) * (d - 1.0));
}

CompletenessResidual completeness_residual(const SeedOperator& s, int trials,
                                           RngStream rng) {
  check_d(s.d);
  const int d = s.d;
  CompletenessResidual r;
  r.trace = std::abs(trace(s.op).real() - static_cast<double>(d) * d);
  r.swap = std::abs(trace_product(s.op, swap_matrix(d)).real() - d);
  if (trials > 0) {
    Mat acc(d * d, d * d);
    for (int t = 0; t < trials; ++t) {
      Mat u = haar_unitary(d, rng);
      Mat w = kron(u, u);
      acc += w * s.op * dagger(w);
    }
    r.twirl_mc = max_abs_diff((1.0 / trials) * acc, exact_twirl(s.op, d));
  }
  return r;
}

Mat case_effect(const SeedOperator& s, MeasCase c) {
  check_d(s.d);
  if (c == MeasCase::parallel) return s.op;
  return partial_transpose_second(s.op, s.d, s.d);
}

double positivity_margin(const SeedOperator& s, MeasCase c) {
  return min_eigenvalue(case_effect(s, c));
}

FamilyBlocks family_blocks(int d, const SeedParams& p) {
  check_d(d);
  FamilyBlocks b;
  b.a00 = 1.0 + 2.0 * p.alpha * (1.0 - d) + p.beta * (1.0 - d) * (1.0 - d);
  b.c = 1.0 + p.alpha * (2.0 - d) + p.beta * (1.0 - d);
  b.s = 1.0 + 2.0 * p.alpha + p.beta;
  if (d > 2) {
    b.h = b.s + 2.0 * p.delta * (d - 2.0) / (d - 1.0);
    b.e = b.s - 2.0 * p.delta / (d - 1.0);
  } else {
    b.h = b.s;
    b.e = b.s;
  }
  return b;
}

double family_min_eig(int d, const SeedParams& p, MeasCase c) {
  FamilyBlocks b = family_blocks(d, p);
  if (c == MeasCase::parallel) {
    double m = std::min(b.a00, b.c - 2.0 * std::abs(p.gamma));
    m = std::min(m, b.h);
    if (d > 2) m = std::min(m, b.e - 2.0 * std::abs(p.delta));
    return m;
  }
  // Conjugate case: the partial transpose moves the gamma coupling onto the
  // {|00>, |mm>} corner; off that corner the diagonal entries c and e stand
  // alone (h - 2 delta = e covers the |mm> combinations orthogonal to the
  // uniform one).
  double z = b.e + (d > 2 ? 2.0 * p.delta * (d - 1.0) : 0.0);
  double half_gap = 0.5 * (b.a00 - z);
  double mu_minus = 0.5 * (b.a00 + z) -
                    std::sqrt(half_gap * half_gap +
                              4.0 * p.gamma * p.gamma * (d - 1.0));
  double m = std::min(b.c, mu_minus);
  if (d > 2) m = std::min(m, b.e);
  return m;
}

SeedOperator reference_operator(const std::string& name, int d) {
  check_d(d);
  const int dim = d * d;
  auto idx = [d](int i, int j) { return i * d + j; };

  Mat x(dim, dim);
  if (name == "identity") {
    x = Mat::identity(dim);
  } else if (name == "case_one_opt") {
    // (d(d+1)/2) |00><00| + (d/2) sum_i |psi_i><psi_i|,
    // psi_i = (|0i> - |i0>)/sqrt(2).
    x(idx(0, 0), idx(0, 0)) = 0.5 * d * (d + 1.0);
    for (int i = 1; i < d; ++i) {
      x(idx(0, i), idx(0, i)) += 0.25 * d;
      x(idx(i, 0), idx(i, 0)) += 0.25 * d;
      x(idx(0, i), idx(i, 0)) -= 0.25 * d;
      x(idx(i, 0), idx(0, i)) -= 0.25 * d;
    }
  } else if (name == "psi_local") {
    // Partial transpose of the rank-1 projector onto
    // (1/sqrt(d)) { [(d-1) sqrt(1+d) + 1] |00> - (sqrt(1+d) - 1) sum |ii> }.
    double rt = std::sqrt(1.0 + d);
    std::vector<cxd> v(dim, 0.0);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    v[idx(0, 0)] = scale * ((d - 1.0) * rt + 1.0);
    for (int i = 1; i < d; ++i) v[idx(i, i)] = -scale * (rt - 1.0);
    x = partial_transpose_second(outer(v, v), d, d);
  } else if (name == "psi_perp") {
    // Partial transpose of (d / 2A+) sum_{i,j >= 1} |ij><ij| + |psi><psi|,
    // psi = sqrt(dA+/2) |00> - sqrt(d / 2A+) sum |ii>, A+ = 2d + sqrt(2d(d+1)).
    double a_plus = 2.0 * d + std::sqrt(2.0 * d * (d + 1.0));
    Mat effect(dim, dim);
    for (int i = 1; i < d; ++i)
      for (int j = 1; j < d; ++j)
        effect(idx(i, j), idx(i, j)) = 0.5 * d / a_plus;
    std::vector<cxd> v(dim, 0.0);
    v[idx(0, 0)] = std::sqrt(0.5 * d * a_plus);
    for (int i = 1; i < d; ++i) v[idx(i, i)] = -std::sqrt(0.5 * d / a_plus);
    effect += outer(v, v);
    x = partial_transpose_second(effect, d, d);
  } else {
    throw std::invalid_argument("unknown reference operator: " + name);
  }

  SeedOperator s;
  s.d = d;
  s.op = std::move(x);
  s.params = solve_family_params(s.op, d);
  return s;
}

std::vector<std::string> reference_operator_names() {
  return {"case_one_opt", "psi_local", "psi_perp", "identity"};
}

HermitianExpansion hermitian_expand(const Mat& x, int d) {
  check_d(d);
  if (x.rows != d * d || x.cols != d * d) {
    throw std::invalid_argument("hermitian_expand: expected d^2 x d^2");
  }
  if (!is_hermitian(x, 1e-10 * std::max(1.0, max_abs(x)))) {
    throw std::invalid_argument("hermitian_expand: not hermitian");
  }
  std::vector<Mat> basis = gellmann_basis(d);
  const int nb = static_cast<int>(basis.size());
  Mat eye = Mat::identity(d);
  HermitianExpansion e;
  e.w = trace(x).real() / (static_cast<double>(d) * d);
  e.r.resize(nb);
  e.s.resize(nb);
  e.t = Mat(nb, nb);
  for (int m = 0; m < nb; ++m) {
    e.r[m] = trace_product(x, kron(basis[m], eye)).real() / (2.0 * d);
    e.s[m] = trace_product(x, kron(eye, basis[m])).real() / (2.0 * d);
    for (int n = 0; n < nb; ++n) {
      e.t(m, n) = trace_product(x, kron(basis[m], basis[n])).real() / 4.0;
    }
  }
  return e;
}

Mat hermitian_reconstruct(const HermitianExpansion& e, int d) {
  check_d(d);
  std::vector<Mat> basis = gellmann_basis(d);
  const int nb = static_cast<int>(basis.size());
  Mat eye = Mat::identity(d);
  Mat x = e.w * Mat::identity(d * d);
  for (int m = 0; m < nb; ++m) {
    if (e.r[m] != 0.0) x += e.r[m] * kron(basis[m], eye);
    if (e.s[m] != 0.0) x += e.s[m] * kron(eye, basis[m]);
    for (int n = 0; n < nb; ++n) {
      cxd t = e.t(m, n);
      if (t != cxd(0.0, 0.0)) x += t * kron(basis[m], basis[n]);
    }
  }
  return x;
}

double stabilizer_covariance_residual(const Mat& x, int d, int trials,
                                      RngStream rng) {
  check_d(d);
  if (x.rows != d * d || x.cols != d * d) {
    throw std::invalid_argument("stabilizer residual: expected d^2 x d^2");
  }
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Mat sub = haar_unitary(d - 1, rng);
    double theta = -std::arg(determinant(sub));
    Mat u(d, d);
    u(0, 0) = std::polar(1.0, theta);
    for (int i = 0; i < d - 1; ++i)
      for (int j = 0; j < d - 1; ++j) u(i + 1, j + 1) = sub(i, j);
    Mat w = kron(u, u);
    worst = std::max(worst, max_abs_diff(x * w, w * x));
  }
  return worst;
}

}  // namespace quditlab

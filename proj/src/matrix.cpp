// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include "quditlab/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace quditlab {

namespace {

void check_same_shape(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

}  // namespace

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat operator+(const Mat& x, const Mat& y) {
  check_same_shape(x, y);
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

Mat operator-(const Mat& x, const Mat& y) {
  check_same_shape(x, y);
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

Mat& operator+=(Mat& x, const Mat& y) {
  check_same_shape(x, y);
  for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
  return x;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul shape mismatch");
  Mat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      cxd v = x(i, k);
      if (v == cxd(0.0, 0.0)) continue;
      const cxd* yrow = &y.a[static_cast<std::size_t>(k) * y.cols];
      cxd* orow = &out.a[static_cast<std::size_t>(i) * y.cols];
      for (int j = 0; j < y.cols; ++j) orow[j] += v * yrow[j];
    }
  }
  return out;
}

Mat operator*(cxd s, const Mat& x) {
  Mat out = x;
  for (auto& v : out.a) v *= s;
  return out;
}

Mat operator*(double s, const Mat& x) { return cxd(s, 0.0) * x; }

Mat transpose(const Mat& x) {
  Mat out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out(j, i) = x(i, j);
  return out;
}

Mat conjugate(const Mat& x) {
  Mat out = x;
  for (auto& v : out.a) v = std::conj(v);
  return out;
}

Mat dagger(const Mat& x) {
  Mat out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out(j, i) = std::conj(x(i, j));
  return out;
}

cxd trace(const Mat& x) {
  cxd t = 0.0;
  for (int i = 0; i < x.rows && i < x.cols; ++i) t += x(i, i);
  return t;
}

cxd trace_product(const Mat& x, const Mat& y) {
  if (x.cols != y.rows || x.rows != y.cols) {
    throw std::invalid_argument("trace_product shape mismatch");
  }
  cxd t = 0.0;
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) t += x(i, k) * y(k, i);
  return t;
}

double fro_norm(const Mat& x) {
  double s = 0.0;
  for (const auto& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const Mat& x) {
  double m = 0.0;
  for (const auto& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Mat& x, const Mat& y) {
  check_same_shape(x, y);
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

bool is_hermitian(const Mat& x, double tol) {
  if (x.rows != x.cols) return false;
  for (int i = 0; i < x.rows; ++i)
    for (int j = i; j < x.cols; ++j)
      if (std::abs(x(i, j) - std::conj(x(j, i))) > tol) return false;
  return true;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      cxd v = x(i, j);
      if (v == cxd(0.0, 0.0)) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          out(i * y.rows + k, j * y.cols + l) = v * y(k, l);
    }
  return out;
}

std::vector<cxd> vec(const Mat& x) { return x.a; }

Mat unvec(const std::vector<cxd>& v, int rows, int cols) {
  if (static_cast<std::size_t>(rows) * cols != v.size()) {
    throw std::invalid_argument("unvec size mismatch");
  }
  Mat out(rows, cols);
  out.a = v;
  return out;
}

Mat outer(const std::vector<cxd>& u, const std::vector<cxd>& v) {
  Mat out(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = u[i] * std::conj(v[j]);
  return out;
}

Mat partial_trace(const Mat& x, const std::vector<int>& dims,
                  const std::vector<int>& keep) {
  int total = 1;
  for (int d : dims) total *= d;
  if (x.rows != total || x.cols != total) {
    throw std::invalid_argument("partial_trace dimension mismatch");
  }
  const int nf = static_cast<int>(dims.size());
  std::vector<bool> kept(nf, false);
  for (int k : keep) kept.at(k) = true;

  std::vector<int> kdims, tdims, kidx, tidx;
  for (int f = 0; f < nf; ++f) {
    if (kept[f]) {
      kdims.push_back(dims[f]);
      kidx.push_back(f);
    } else {
      tdims.push_back(dims[f]);
      tidx.push_back(f);
    }
  }
  int dk = 1, dt = 1;
  for (int d : kdims) dk *= d;
  for (int d : tdims) dt *= d;

  // Strides of each factor inside the flat product index.
  std::vector<int> stride(nf, 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  auto compose = [&](int kcombo, int tcombo) {
    int idx = 0;
    for (int p = static_cast<int>(kidx.size()) - 1; p >= 0; --p) {
      idx += (kcombo % kdims[p]) * stride[kidx[p]];
      kcombo /= kdims[p];
    }
    for (int p = static_cast<int>(tidx.size()) - 1; p >= 0; --p) {
      idx += (tcombo % tdims[p]) * stride[tidx[p]];
      tcombo /= tdims[p];
    }
    return idx;
  };

  Mat out(dk, dk);
  for (int r = 0; r < dk; ++r)
    for (int c = 0; c < dk; ++c) {
      cxd s = 0.0;
      for (int t = 0; t < dt; ++t) s += x(compose(r, t), compose(c, t));
      out(r, c) = s;
    }
  return out;
}

Mat partial_transpose_second(const Mat& x, int d1, int d2) {
  if (x.rows != d1 * d2 || x.cols != d1 * d2) {
    throw std::invalid_argument("partial_transpose dimension mismatch");
  }
  Mat out(x.rows, x.cols);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d1; ++k)
        for (int l = 0; l < d2; ++l)
          out(i * d2 + l, k * d2 + j) = x(i * d2 + j, k * d2 + l);
  return out;
}

std::vector<cxd> mat_vec(const Mat& x, const std::vector<cxd>& v) {
  if (static_cast<std::size_t>(x.cols) != v.size()) {
    throw std::invalid_argument("mat_vec shape mismatch");
  }
  std::vector<cxd> out(x.rows, cxd(0.0, 0.0));
  for (int i = 0; i < x.rows; ++i) {
    cxd s = 0.0;
    const cxd* row = &x.a[static_cast<std::size_t>(i) * x.cols];
    for (int j = 0; j < x.cols; ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

cxd inner(const std::vector<cxd>& u, const std::vector<cxd>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner size mismatch");
  cxd s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const std::vector<cxd>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::array<double, 4> vec_identity_residuals(const Mat& m, const Mat& n,
                                             const Mat& a, const Mat& b) {
  if (m.cols != a.rows || n.cols != a.cols || a.rows != b.rows ||
      a.cols != b.cols) {
    throw std::invalid_argument("vec_identity_residuals shape mismatch");
  }
  std::array<double, 4> res{};

  std::vector<cxd> lhs = mat_vec(kron(m, n), vec(a));
  std::vector<cxd> rhs = vec(m * a * transpose(n));
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  }
  res[0] = worst;

  Mat ab = outer(vec(a), vec(b));
  std::vector<int> dims = {a.rows, a.cols};
  res[1] = max_abs_diff(partial_trace(ab, dims, {0}), a * dagger(b));
  res[2] = max_abs_diff(partial_trace(ab, dims, {1}), transpose(a) * conjugate(b));

  // Square probes on each side built from the rectangular inputs.
  Mat m1 = dagger(n) * n;  // input space
  Mat m2 = dagger(m) * m;  // output space
  cxd t1 = trace(a * m1 * dagger(a) * m2);
  cxd t2 = trace_product(outer(vec(a), vec(a)), kron(m2, transpose(m1)));
  res[3] = std::abs(t1 - t2);
  return res;
}

}  // namespace quditlab

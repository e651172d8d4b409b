// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include "quditlab/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "quditlab/eig.hpp"
#include "quditlab/symmetric.hpp"

namespace quditlab {

namespace {

void check_channel(const KrausChannel& ch) {
  if (ch.d < 2 || ch.n < 1 || ch.kraus.empty()) {
    throw std::invalid_argument("channel: bad shape");
  }
  const int ds = static_cast<int>(bose_dim(ch.d, ch.n));
  for (const auto& a : ch.kraus) {
    if (a.rows != ch.d || a.cols != ds) {
      throw std::invalid_argument("channel: kraus operator shape mismatch");
    }
  }
}

double inv_sqrt_clamped(double x) { return x > 1e-14 ? 1.0 / std::sqrt(x) : 0.0; }

// Symmetric-coordinate amplitudes of |phi>^{x n}: entry b is
// sqrt(n! / prod_i occ_i!) * prod_i phi_i^{occ_i}.
std::vector<cxd> sym_power_state(const std::vector<cxd>& phi, const SymBasis& basis) {
  const int dim = static_cast<int>(basis.occupations.size());
  std::vector<cxd> out(dim);
  double nfact = 1.0;
  for (int i = 2; i <= basis.n; ++i) nfact *= i;
  for (int b = 0; b < dim; ++b) {
    const auto& occ = basis.occupations[b];
    double denom = 1.0;
    cxd amp = 1.0;
    for (int i = 0; i < basis.d; ++i) {
      for (int r = 2; r <= occ[i]; ++r) denom *= r;
      for (int r = 0; r < occ[i]; ++r) amp *= phi[i];
    }
    out[b] = std::sqrt(nfact / denom) * amp;
  }
  return out;
}

}  // namespace

Mat choi_matrix(const KrausChannel& ch) {
  check_channel(ch);
  const int dim = ch.d * static_cast<int>(bose_dim(ch.d, ch.n));
  Mat choi(dim, dim);
  for (const auto& a : ch.kraus) {
    std::vector<cxd> v = vec(a);
    choi += outer(v, v);
  }
  return choi;
}

ChannelResiduals validate_channel(const KrausChannel& ch) {
  check_channel(ch);
  const int ds = static_cast<int>(bose_dim(ch.d, ch.n));
  Mat s(ds, ds);
  for (const auto& a : ch.kraus) s += dagger(a) * a;
  ChannelResiduals r;
  r.tp = max_abs_diff(s, Mat::identity(ds));
  double lmin = min_eigenvalue(choi_matrix(ch));
  r.cp = std::max(0.0, -lmin);
  return r;
}

KrausChannel choi_to_kraus(const Mat& choi, int d, int n) {
  const int ds = static_cast<int>(bose_dim(d, n));
  if (choi.rows != d * ds || choi.cols != d * ds) {
    throw std::invalid_argument("choi_to_kraus: dimension mismatch");
  }
  EigResult e = hermitian_eigs(choi);
  double lmax = std::max(e.values.back(), 0.0);
  KrausChannel ch;
  ch.d = d;
  ch.n = n;
  // Descending eigenvalue order; keep the numerically nonzero part.
  for (int k = static_cast<int>(e.values.size()) - 1; k >= 0; --k) {
    double lam = e.values[k];
    if (lam <= 1e-12 * std::max(lmax, 1.0)) break;
    std::vector<cxd> col(choi.rows);
    for (int r = 0; r < choi.rows; ++r) col[r] = std::sqrt(lam) * e.vectors(r, k);
    ch.kraus.push_back(unvec(col, d, ds));
  }
  if (ch.kraus.empty()) throw std::invalid_argument("choi_to_kraus: zero choi");

  // Right polish A_k -> A_k S^{-1/2} makes the set exactly trace preserving.
  Mat s(ds, ds);
  for (const auto& a : ch.kraus) s += dagger(a) * a;
  Mat correction = hermitian_function(s, inv_sqrt_clamped);
  for (auto& a : ch.kraus) a = a * correction;
  return ch;
}

Mat apply_channel(const KrausChannel& ch, const Mat& rho_sym) {
  check_channel(ch);
  Mat out(ch.d, ch.d);
  for (const auto& a : ch.kraus) out += a * rho_sym * dagger(a);
  return out;
}

double estimation_bound(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("estimation_bound: bad (d, n)");
  return static_cast<double>(n + 1) / static_cast<double>(n + d);
}

double conjugation_fidelity(const KrausChannel& ch) {
  check_channel(ch);
  SymBasis in_basis(ch.d, ch.n);
  SymBasis out_basis(ch.d, ch.n + 1);
  const Mat vin_dag = dagger(in_basis.isometry);
  double f = 0.0;
  for (const auto& a : ch.kraus) {
    // Lift to product coordinates, conjugate, and project the flattened
    // operator (output slot first) onto the (n+1)-fold symmetric subspace.
    Mat lifted = conjugate(a * vin_dag);
    std::vector<cxd> y = mat_vec(dagger(out_basis.isometry), vec(lifted));
    for (const auto& z : y) f += std::norm(z);
  }
  return f / static_cast<double>(bose_dim(ch.d, ch.n + 1));
}

McEstimate conjugation_fidelity_mc(const KrausChannel& ch, std::int64_t samples,
                                   RngStream rng, int threads) {
  check_channel(ch);
  SymBasis in_basis(ch.d, ch.n);
  return chunked_mc(samples, rng, threads, [&](RngStream& local) {
    std::vector<cxd> phi = haar_state(ch.d, local);
    std::vector<cxd> s = sym_power_state(phi, in_basis);
    // Target is the conjugate state: <conj(phi)| A |s>.
    double p = 0.0;
    for (const auto& a : ch.kraus) {
      std::vector<cxd> out = mat_vec(a, s);
      cxd amp = 0.0;
      for (int i = 0; i < ch.d; ++i) amp += phi[i] * out[i];
      p += std::norm(amp);
    }
    return p;
  });
}

KrausChannel optimal_conjugator(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("optimal_conjugator: bad (d, n)");
  const int ds = static_cast<int>(bose_dim(d, n));
  SymBasis in_basis(d, n);
  // Choi operator: the (n+1)-fold symmetric projector, output slot first,
  // scaled to saturate the bound, then pulled back to symmetric input
  // coordinates through the input isometry.
  Mat p_full = sym_projector(d, n + 1);
  const int dn = in_basis.isometry.rows;  // d^n
  Mat embed(d * dn, d * ds);
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < ds; ++c)
        embed(i * dn + r, i * ds + c) = in_basis.isometry(r, c);
  double w = estimation_bound(d, n);
  Mat choi = w * (dagger(embed) * p_full * embed);
  return choi_to_kraus(choi, d, n);
}

KrausChannel random_channel(int d, int n, int kraus_count, RngStream& rng) {
  if (d < 2 || n < 1 || kraus_count < 1) {
    throw std::invalid_argument("random_channel: bad arguments");
  }
  const int ds = static_cast<int>(bose_dim(d, n));
  if (kraus_count * d < ds) {
    throw std::invalid_argument(
        "random_channel: kraus_count * d must reach bose_dim(d, n)");
  }
  Mat w = mgs_orthonormal_columns(ginibre(kraus_count * d, ds, rng));
  KrausChannel ch;
  ch.d = d;
  ch.n = n;
  for (int k = 0; k < kraus_count; ++k) {
    Mat a(d, ds);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < ds; ++c) a(r, c) = w(k * d + r, c);
    ch.kraus.push_back(std::move(a));
  }
  return ch;
}

KrausChannel identity_channel(int d) {
  KrausChannel ch;
  ch.d = d;
  ch.n = 1;
  ch.kraus.push_back(Mat::identity(d));
  return ch;
}

KrausChannel constant_channel(int d, int n) {
  const int ds = static_cast<int>(bose_dim(d, n));
  KrausChannel ch;
  ch.d = d;
  ch.n = n;
  for (int b = 0; b < ds; ++b) {
    Mat a(d, ds);
    a(0, b) = 1.0;
    ch.kraus.push_back(std::move(a));
  }
  return ch;
}

}  // namespace quditlab

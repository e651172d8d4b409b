// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include "quditlab/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <future>
#include <stdexcept>

namespace quditlab {

namespace {

// Free coordinates on the completeness variety: (alpha, gamma[, delta]);
// beta is eliminated through the swap-trace condition. delta only exists for
// d >= 3.
struct FreeSpace {
  int d;
  bool frozen;  // gamma = delta = 0

  int dims() const { return frozen ? 1 : (d == 2 ? 2 : 3); }

  SeedParams params(const std::vector<double>& v) const {
    SeedParams p;
    p.alpha = v[0];
    if (!frozen) {
      p.gamma = v[1];
      if (d > 2) p.delta = v[2];
    }
    p.beta = beta_for_completeness(d, p.gamma, p.delta);
    return p;
  }
};

struct Objective {
  FreeSpace space;
  MeasCase meas_case;
  double kappa = 0.0;
  std::int64_t* evals = nullptr;

  double operator()(const std::vector<double>& v) const {
    ++*evals;
    SeedParams p = space.params(v);
    double f = mean_fidelity_params(space.d, p);
    double margin = family_min_eig(space.d, p, meas_case);
    double viol = std::min(0.0, margin);
    return -f + kappa * viol * viol;  // minimized
  }
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2). Converges when the simplex diameter or the value spread falls
// under the configured tolerances.
std::vector<double> nelder_mead(const Objective& obj, std::vector<double> start,
                                double step, int max_iter) {
  const int n = static_cast<int>(start.size());
  std::vector<std::vector<double>> pts(n + 1, start);
  for (int i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> val(n + 1);
  for (int i = 0; i <= n; ++i) val[i] = obj(pts[i]);

  auto order = [&]() {
    std::vector<int> idx(n + 1);
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return val[a] < val[b]; });
    std::vector<std::vector<double>> p2(n + 1);
    std::vector<double> v2(n + 1);
    for (int i = 0; i <= n; ++i) {
      p2[i] = pts[idx[i]];
      v2[i] = val[idx[i]];
    }
    pts.swap(p2);
    val.swap(v2);
  };

  for (int it = 0; it < max_iter; ++it) {
    order();
    double diam = 0.0;
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k < n; ++k) diam = std::max(diam, std::abs(pts[i][k] - pts[0][k]));
    if (diam <= 1e-10 || val[n] - val[0] <= 1e-9 * std::max(1.0, std::abs(val[0]))) {
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) centroid[k] += pts[i][k] / n;

    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (int k = 0; k < n; ++k) p[k] = centroid[k] + t * (pts[n][k] - centroid[k]);
      return p;
    };

    std::vector<double> refl = blend(-1.0);
    double f_refl = obj(refl);
    if (f_refl < val[0]) {
      std::vector<double> exp_pt = blend(-2.0);
      double f_exp = obj(exp_pt);
      if (f_exp < f_refl) {
        pts[n] = exp_pt;
        val[n] = f_exp;
      } else {
        pts[n] = refl;
        val[n] = f_refl;
      }
    } else if (f_refl < val[n - 1]) {
      pts[n] = refl;
      val[n] = f_refl;
    } else {
      bool outside = f_refl < val[n];
      std::vector<double> con = blend(outside ? -0.5 : 0.5);
      double f_con = obj(con);
      if (f_con < std::min(f_refl, val[n])) {
        pts[n] = con;
        val[n] = f_con;
      } else {
        for (int i = 1; i <= n; ++i) {
          for (int k = 0; k < n; ++k) pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
          val[i] = obj(pts[i]);
        }
      }
    }
  }
  order();
  return pts[0];
}

struct RestartOutcome {
  std::vector<double> v;
  double fidelity = -1.0;
  std::int64_t evals = 0;
};

double vec_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

RestartOutcome run_restart(const FreeSpace& space, MeasCase c,
                           const OptimizerConfig& cfg, int restart_index) {
  const int n = space.dims();
  std::vector<double> start(n, 0.0);
  if (restart_index > 0) {
    RngStream rs = RngStream(cfg.seed).split(static_cast<std::uint64_t>(restart_index));
    for (int k = 0; k < n; ++k) start[k] = -2.0 + 4.0 * rs.uniform();
  }

  RestartOutcome out;
  Objective obj{space, c, 0.0, &out.evals};

  std::vector<double> v = start;
  for (int round = 0; round < cfg.penalty_rounds; ++round) {
    obj.kappa = cfg.penalty_start * std::pow(10.0, round);
    bool final_round = round == cfg.penalty_rounds - 1;
    int iters = final_round ? cfg.max_iterations : std::min(cfg.max_iterations, 80);
    double step = round == 0 ? 0.5 : 0.05;
    v = nelder_mead(obj, v, step, iters);
  }

  auto feasible = [&](const std::vector<double>& p) {
    return family_min_eig(space.d, space.params(p), c) >= 0.0;
  };

  // Pull an infeasible endpoint back to the boundary along the segment to the
  // origin (the identity seed is strictly interior).
  if (!feasible(v)) {
    double lo = 0.0, hi = 1.0;  // fraction of v kept
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (lo + hi);
      std::vector<double> p(v);
      for (double& x : p) x *= mid;
      (feasible(p) ? lo : hi) = mid;
    }
    for (double& x : v) x *= lo;
  }

  // The objective is linear in the free coordinates, so its gradient is a
  // constant vector; push along it to the positivity boundary.
  {
    double dd = space.d;
    double big = dd * (dd + 1.0) * (dd + 2.0);
    double ca = -2.0 * (dd - 1.0) / (dd * (dd + 1.0));
    double cb = (3.0 * dd - 2.0) * (dd - 1.0) / big;
    double cg = 8.0 * (dd - 1.0) / big;
    double cd = 2.0 * dd * (dd - 2.0) / big;
    std::vector<double> g(n, 0.0);
    g[0] = ca;
    if (!space.frozen) {
      g[1] = cg - cb * 4.0 / dd;
      if (space.d > 2) g[2] = cd - cb * 2.0 * (dd - 2.0) / (dd - 1.0);
    }
    double gn = vec_norm(g);
    if (gn > 0.0) {
      for (double& x : g) x /= gn;
      double step = 1e-3;
      std::vector<double> probe(n);
      auto shifted = [&](double t) {
        for (int k = 0; k < n; ++k) probe[k] = v[k] + t * g[k];
        return probe;
      };
      if (feasible(shifted(step))) {
        while (step < 1e6 && feasible(shifted(step * 2.0))) step *= 2.0;
        double lo = step, hi = step * 2.0;
        for (int it = 0; it < 80; ++it) {
          double mid = 0.5 * (lo + hi);
          (feasible(shifted(mid)) ? lo : hi) = mid;
        }
        v = shifted(lo);
      }
    }
  }

  out.v = v;
  out.fidelity = mean_fidelity_params(space.d, space.params(v));
  return out;
}

}  // namespace

OptimizationResult optimize_seed(int d, MeasCase c, const OptimizerConfig& cfg) {
  if (d < 2) throw std::invalid_argument("optimize_seed: d >= 2");
  if (cfg.restarts < 1 || cfg.penalty_rounds < 1) {
    throw std::invalid_argument("optimize_seed: bad config");
  }
  FreeSpace space{d, cfg.freeze_off_diagonal};

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  if (cfg.threads <= 1) {
    for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(space, c, cfg, r);
  } else {
    std::vector<std::future<void>> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < cfg.threads; ++t) {
      pool.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          int r = next.fetch_add(1);
          if (r >= cfg.restarts) return;
          outcomes[r] = run_restart(space, c, cfg, r);
        }
      }));
    }
    for (auto& f : pool) f.get();
  }

  // Merge in restart order: max fidelity, ties to the smaller parameter norm.
  int best = 0;
  std::int64_t evals = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    evals += outcomes[r].evals;
    if (r == 0) continue;
    double gap = outcomes[r].fidelity - outcomes[best].fidelity;
    if (gap > 1e-9 ||
        (gap > -1e-9 && vec_norm(outcomes[r].v) < vec_norm(outcomes[best].v))) {
      best = r;
    }
  }

  OptimizationResult res;
  res.d = d;
  res.meas_case = c;
  res.best = space.params(outcomes[best].v);
  res.restarts = cfg.restarts;
  res.evaluations = evals;

  SeedOperator seed = build_seed(d, res.best);
  res.fidelity = mean_fidelity(seed);
  res.min_eig = positivity_margin(seed, c);
  res.trace_residual = std::abs(trace(seed.op).real() - static_cast<double>(d) * d);
  res.swap_residual =
      std::abs(trace_product(seed.op, swap_matrix(d)).real() - d);

  ClosedForms forms = closed_forms(d);
  res.dist_f_parallel = res.fidelity - forms.f_parallel;
  res.dist_f_local = res.fidelity - forms.f_local;
  res.dist_f_perp = res.fidelity - forms.f_perp;
  if (std::abs(res.dist_f_parallel) <= 1e-4) {
    res.flags.push_back("achieved value matches f_parallel closed form");
  }
  if (std::abs(res.dist_f_local) <= 1e-4) {
    res.flags.push_back("achieved value matches f_local closed form");
  }
  if (std::abs(res.dist_f_perp) <= 1e-4) {
    res.flags.push_back("achieved value matches f_perp closed form");
  }
  return res;
}

VerifyReport verify_result(const OptimizationResult& r, double tol) {
  VerifyReport rep;
  SeedOperator seed = build_seed(r.d, r.best);
  auto ge = [&](const std::string& name, double value, double bound) {
    rep.lines.push_back({name, value, bound, ">=", value >= bound - tol});
  };
  auto le = [&](const std::string& name, double value, double bound) {
    rep.lines.push_back({name, value, bound, "<=", value <= bound + tol});
  };

  le("completeness_trace",
     std::abs(trace(seed.op).real() - static_cast<double>(r.d) * r.d), 1e-10);
  le("completeness_swap",
     std::abs(trace_product(seed.op, swap_matrix(r.d)).real() - r.d), 1e-10);
  ge("positivity_margin", positivity_margin(seed, r.meas_case), -1e-8);
  le("fidelity_consistency", std::abs(mean_fidelity(seed) - r.fidelity), 1e-12);

  // Documentation lines: the feasible region's closed-form inequality list.
  FamilyBlocks b = family_blocks(r.d, r.best);
  if (r.meas_case == MeasCase::parallel) {
    ge("block_corner_00", b.a00, 0.0);
    ge("block_pair_0m", b.c - 2.0 * std::abs(r.best.gamma), 0.0);
    ge("block_diag_mm", b.h, 0.0);
    if (r.d > 2) ge("block_pair_mn", b.e - 2.0 * std::abs(r.best.delta), 0.0);
  } else {
    ge("block_pair_0m", b.c, 0.0);
    if (r.d > 2) ge("block_diag_mn", b.e, 0.0);
    double z = b.e + (r.d > 2 ? 2.0 * r.best.delta * (r.d - 1.0) : 0.0);
    double half_gap = 0.5 * (b.a00 - z);
    double mu_minus =
        0.5 * (b.a00 + z) -
        std::sqrt(half_gap * half_gap + 4.0 * r.best.gamma * r.best.gamma * (r.d - 1.0));
    ge("block_corner_pencil", mu_minus, 0.0);
  }

  rep.ok = true;
  for (const auto& line : rep.lines) rep.ok = rep.ok && line.ok;
  return rep;
}

}  // namespace quditlab

// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command line surface. Every subcommand renders a deterministic report
// (fixed seed in, identical bytes out); timestamps never enter the payload.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quditlab/channel.hpp"
#include "quditlab/eig.hpp"
#include "quditlab/fidelity.hpp"
#include "quditlab/optimizer.hpp"
#include "quditlab/report.hpp"
#include "quditlab/sampler.hpp"
#include "quditlab/symmetric.hpp"
#include "quditlab/version.hpp"

namespace {

using quditlab::json;

struct GlobalOpts {
  std::uint64_t seed = 0x5EEDC0DEULL;
  int threads = 1;
  std::string format = "json";
  std::string out;
};

void emit(const GlobalOpts& g, const json& report, const std::string& csv) {
  std::string text;
  if (g.format == "csv") {
    if (!csv.empty()) {
      text = csv;
    } else {
      // Generic CSV: JSON-pointer path per line against the same payload.
      json flat = report.flatten();
      for (const auto& [key, value] : flat.items()) {
        text += key + "," + value.dump() + "\n";
      }
    }
  } else {
    text = quditlab::render_json(report);
  }
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path: " + g.out);
    f << text;
  }
}

int cmd_table1(const GlobalOpts& g, const std::vector<int>& d_list,
               std::int64_t samples, int mc_max_d) {
  quditlab::Table1Config cfg;
  cfg.d_list = d_list;
  cfg.mc_samples = samples;
  cfg.mc_max_d = mc_max_d;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  auto rows = quditlab::table1(cfg);

  std::vector<std::string> flags;
  for (const auto& row : rows) {
    for (const auto& fl : row.closed.flags) {
      flags.push_back("d=" + std::to_string(row.closed.d) + " " + fl);
    }
  }
  flags.push_back(
      "psi_perp reference operator violates pair completeness; f_perp is the "
      "closed form, not an operator average");

  json config{{"d_list", d_list},
              {"samples", samples},
              {"mc_max_d", mc_max_d},
              {"seed", g.seed},
              {"threads", g.threads}};
  json residuals = json::object();
  for (const auto& row : rows) {
    if (!row.mc) continue;
    int d = row.closed.d;
    residuals["mc_gap_parallel_d" + std::to_string(d)] =
        row.mc->parallel.mean - row.closed.f_parallel;
    residuals["mc_gap_local_d" + std::to_string(d)] =
        row.mc->local.mean - row.closed.f_local;
  }
  json rep = quditlab::make_report("table1", config,
                                   quditlab::table1_results(rows), residuals, flags);
  emit(g, rep, quditlab::table1_csv(rows));
  return 0;
}

int cmd_optimize(const GlobalOpts& g, int d, const std::string& case_str,
                 int restarts) {
  quditlab::MeasCase c = quditlab::parse_case(case_str);
  quditlab::OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  quditlab::OptimizationResult res = quditlab::optimize_seed(d, c, cfg);
  quditlab::VerifyReport ver = quditlab::verify_result(res);

  json config{{"d", d},
              {"case", case_str},
              {"restarts", restarts},
              {"seed", g.seed},
              {"threads", g.threads}};
  json residuals{{"completeness_trace", res.trace_residual},
                 {"completeness_swap", res.swap_residual},
                 {"min_eig", res.min_eig}};
  json rep = quditlab::make_report("optimize", config,
                                   quditlab::optimize_results(res, ver),
                                   residuals, res.flags);
  emit(g, rep, "");
  return ver.ok ? 0 : 1;
}

int cmd_bound(const GlobalOpts& g, int d, int n, int fuzz) {
  double bound = quditlab::estimation_bound(d, n);
  quditlab::KrausChannel best = quditlab::optimal_conjugator(d, n);
  quditlab::ChannelResiduals best_res = quditlab::validate_channel(best);
  double best_fid = quditlab::conjugation_fidelity(best);

  json results{{"d", d},
               {"n", n},
               {"bound", bound},
               {"optimal_fidelity", best_fid},
               {"optimal_gap", bound - best_fid}};
  json residuals{{"optimal_tp", best_res.tp}, {"optimal_cp", best_res.cp}};
  std::vector<std::string> flags;

  if (fuzz > 0) {
    quditlab::RngStream rng(g.seed);
    int kmin = (quditlab::bose_dim(d, n) + d - 1) / d;
    double max_fid = 0.0;
    double max_tp = 0.0;
    for (int i = 0; i < fuzz; ++i) {
      quditlab::RngStream sub = rng.split(static_cast<std::uint64_t>(i));
      quditlab::KrausChannel ch =
          quditlab::random_channel(d, n, kmin + i % 4, sub);
      max_tp = std::max(max_tp, quditlab::validate_channel(ch).tp);
      max_fid = std::max(max_fid, quditlab::conjugation_fidelity(ch));
    }
    results["fuzz_count"] = fuzz;
    results["fuzz_max_fidelity"] = max_fid;
    results["fuzz_margin"] = bound - max_fid;
    residuals["fuzz_max_tp"] = max_tp;
    if (max_fid > bound + 1e-9) {
      flags.push_back("fuzz exceeded the bound");  // should never happen
    }
  }

  json config{{"d", d}, {"n", n}, {"fuzz", fuzz}, {"seed", g.seed}};
  json rep = quditlab::make_report("bound", config, results, residuals, flags);
  emit(g, rep, "");
  return flags.empty() ? 0 : 1;
}

int cmd_simulate(const GlobalOpts& g, int d, const std::string& case_str,
                 const std::string& seed_op, std::int64_t samples) {
  quditlab::MeasCase c = quditlab::parse_case(case_str);
  quditlab::SeedOperator seed = quditlab::reference_operator(seed_op, d);
  quditlab::SimulationResult res = quditlab::simulate(
      seed, c, samples, quditlab::RngStream(g.seed), g.threads);

  double tr = std::abs(quditlab::trace(seed.op).real() - double(d) * d);
  double sw = std::abs(
      quditlab::trace_product(seed.op, quditlab::swap_matrix(d)).real() - d);
  json config{{"d", d},
              {"case", case_str},
              {"seed_op", seed_op},
              {"samples", samples},
              {"seed", g.seed},
              {"threads", g.threads}};
  json residuals{{"completeness_trace", tr},
                 {"completeness_swap", sw},
                 {"mc_gap", res.mean - res.exact}};
  std::vector<std::string> flags;
  if (std::abs(res.mean - res.exact) > 3.0 * res.std_error) {
    flags.push_back("empirical fidelity more than 3 standard errors from exact");
  }
  json rep = quditlab::make_report("simulate", config,
                                   quditlab::simulate_results(res), residuals,
                                   flags);
  emit(g, rep, "");
  return 0;
}

int cmd_selftest(const GlobalOpts& g) {
  json lines = json::array();
  bool all_ok = true;
  auto check = [&](const std::string& name, double value, double bound) {
    bool ok = value <= bound;
    lines.push_back(json{{"name", name},
                         {"value", value},
                         {"bound", bound},
                         {"sense", "<="},
                         {"ok", ok}});
    all_ok = all_ok && ok;
  };
  quditlab::RngStream rng(g.seed);

  // Symmetric subspace projectors: idempotent, correct trace, and equal to
  // the permutation-sum construction.
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    quditlab::Mat p = quditlab::sym_projector(d, n);
    std::string tag = "projector_d" + std::to_string(d) + "_n" + std::to_string(n);
    check(tag + "_idempotent", quditlab::max_abs_diff(p * p, p), 1e-12);
    check(tag + "_trace",
          std::abs(quditlab::trace(p).real() - quditlab::bose_dim(d, n)), 1e-10);
    check(tag + "_perm_sum",
          quditlab::max_abs_diff(p, quditlab::sym_projector_by_permutations(d, n)),
          1e-12);
  }

  // Generator expansion round trip on random Hermitian input.
  for (int d : {2, 3, 4}) {
    quditlab::Mat h = quditlab::ginibre(d * d, d * d, rng);
    h = 0.5 * (h + quditlab::dagger(h));
    auto ex = quditlab::hermitian_expand(h, d);
    check("expansion_round_trip_d" + std::to_string(d),
          quditlab::max_abs_diff(h, quditlab::hermitian_reconstruct(ex, d)), 1e-10);
  }

  // Completeness of the named reference seeds (psi_perp is the documented
  // exception and is excluded here).
  for (int d : {2, 3, 4}) {
    for (const char* name : {"identity", "case_one_opt", "psi_local"}) {
      quditlab::SeedOperator s = quditlab::reference_operator(name, d);
      auto res = quditlab::completeness_residual(s, 2000, rng.split(d));
      std::string tag = std::string(name) + "_d" + std::to_string(d);
      check("completeness_trace_" + tag, res.trace, 1e-10);
      check("completeness_swap_" + tag, res.swap, 1e-10);
      check("twirl_mc_" + tag, res.twirl_mc, 0.2);
    }
  }

  // Moment operator basics and the closed-form family spectrum.
  for (int d : {2, 3, 4}) {
    quditlab::Mat m = quditlab::moment_operator(d);
    check("moment_trace_d" + std::to_string(d),
          std::abs(quditlab::trace(m).real() - 1.0 / d), 1e-12);
    check("moment_psd_d" + std::to_string(d),
          std::max(0.0, -quditlab::min_eigenvalue(m)), 1e-12);
    quditlab::RngStream pr = rng.split(100 + d);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      quditlab::SeedParams p;
      p.alpha = -1.0 + 2.0 * pr.uniform();
      p.beta = -1.0 + 2.0 * pr.uniform();
      p.gamma = -1.0 + 2.0 * pr.uniform();
      p.delta = d > 2 ? -1.0 + 2.0 * pr.uniform() : 0.0;
      for (auto c : {quditlab::MeasCase::parallel, quditlab::MeasCase::conjugate}) {
        double closed = quditlab::family_min_eig(d, p, c);
        double eig = quditlab::positivity_margin(quditlab::build_seed(d, p), c);
        worst = std::max(worst, std::abs(closed - eig));
      }
    }
    check("family_min_eig_closed_form_d" + std::to_string(d), worst, 1e-9);
  }

  // Channel identities.
  for (int d : {2, 3}) {
    check("identity_channel_fidelity_d" + std::to_string(d),
          std::abs(quditlab::conjugation_fidelity(quditlab::identity_channel(d)) -
                   2.0 / (d + 1.0)),
          1e-12);
    check("constant_channel_fidelity_d" + std::to_string(d),
          std::abs(quditlab::conjugation_fidelity(quditlab::constant_channel(d, 1)) -
                   1.0 / d),
          1e-12);
  }
  for (auto [d, n] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    quditlab::KrausChannel ch = quditlab::optimal_conjugator(d, n);
    auto res = quditlab::validate_channel(ch);
    std::string tag = "_d" + std::to_string(d) + "_n" + std::to_string(n);
    check("optimal_conjugator_tp" + tag, res.tp, 1e-9);
    check("optimal_conjugator_cp" + tag, res.cp, 1e-9);
    check("optimal_conjugator_gap" + tag,
          std::abs(quditlab::conjugation_fidelity(ch) -
                   quditlab::estimation_bound(d, n)),
          1e-9);
  }

  // Eigensolver reconstruction on a random Hermitian matrix.
  {
    quditlab::Mat h = quditlab::ginibre(12, 12, rng);
    h = 0.5 * (h + quditlab::dagger(h));
    auto eg = quditlab::hermitian_eigs(h);
    quditlab::Mat rec = quditlab::Mat::zero(12, 12);
    for (int k = 0; k < 12; ++k) {
      for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 12; ++j) {
          rec(i, j) += eg.values[k] * eg.vectors(i, k) *
                       std::conj(eg.vectors(j, k));
        }
      }
    }
    check("eigensolver_reconstruction", quditlab::max_abs_diff(rec, h),
          1e-10 * quditlab::fro_norm(h));
  }

  json config{{"seed", g.seed}};
  json results{{"ok", all_ok}, {"lines", lines}};
  json rep = quditlab::make_report("selftest", config, results, json::object(),
                                   {});
  emit(g, rep, "");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugate-pair state estimation toolkit (v" +
               std::string(quditlab::kVersion) + ")"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "base RNG seed")
      ->envname("QUDIT_LAB_SEED")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "output path (default stdout)");

  std::vector<int> d_list = {2, 3, 4, 5, 6, 11, 17};
  std::int64_t samples = 100000;
  int mc_max_d = 4;
  auto* t1 = app.add_subcommand("table1", "closed-form benchmark table");
  t1->fallthrough();
  t1->add_option("--d-list", d_list, "dimensions")->delimiter(',');
  t1->add_option("--samples", samples, "Monte Carlo samples per estimate");
  t1->add_option("--mc-max-d", mc_max_d, "largest d carrying MC columns");

  int opt_d = 2;
  std::string opt_case;
  int restarts = 20;
  auto* op = app.add_subcommand("optimize", "maximize fidelity over the seed family");
  op->fallthrough();
  op->add_option("--d", opt_d, "qudit dimension")->required()->check(CLI::Range(2, 64));
  op->add_option("--case", opt_case, "pair case")
      ->required()
      ->check(CLI::IsMember({"parallel", "conjugate"}));
  op->add_option("--restarts", restarts, "multistart count")->check(CLI::Range(1, 10000));

  int b_d = 2, b_n = 1, fuzz = 0;
  auto* bd = app.add_subcommand("bound", "conjugation fidelity bound for N copies");
  bd->fallthrough();
  bd->add_option("--d", b_d, "qudit dimension")->required()->check(CLI::Range(2, 16));
  bd->add_option("--n", b_n, "input copy count")->required()->check(CLI::Range(1, 8));
  bd->add_option("--fuzz", fuzz, "random channels to test against the bound")
      ->check(CLI::Range(0, 100000));

  int s_d = 2;
  std::string s_case;
  std::string seed_op = "case_one_opt";
  std::int64_t s_samples = 100000;
  auto* sim = app.add_subcommand("simulate", "rejection-sample POVM outcomes");
  sim->fallthrough();
  sim->add_option("--d", s_d, "qudit dimension")->required()->check(CLI::Range(2, 16));
  sim->add_option("--case", s_case, "pair case")
      ->required()
      ->check(CLI::IsMember({"parallel", "conjugate"}));
  sim->add_option("--seed-op", seed_op, "named reference seed")
      ->check(CLI::IsMember(quditlab::reference_operator_names()));
  sim->add_option("--samples", s_samples, "accepted samples")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{100000000}));

  auto* st = app.add_subcommand("selftest", "run identity and residual suites");
  st->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (t1->parsed()) return cmd_table1(g, d_list, samples, mc_max_d);
    if (op->parsed()) return cmd_optimize(g, opt_d, opt_case, restarts);
    if (bd->parsed()) return cmd_bound(g, b_d, b_n, fuzz);
    if (sim->parsed()) return cmd_simulate(g, s_d, s_case, seed_op, s_samples);
    if (st->parsed()) return cmd_selftest(g);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

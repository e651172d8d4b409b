// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Thin python surface. Matrices cross as complex numpy arrays; structured
// results cross as JSON strings and are hydrated into dicts by the package
// wrapper, so the binding layer stays free of bespoke converters.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quditlab/channel.hpp"
#include "quditlab/eig.hpp"
#include "quditlab/fidelity.hpp"
#include "quditlab/optimizer.hpp"
#include "quditlab/report.hpp"
#include "quditlab/sampler.hpp"
#include "quditlab/symmetric.hpp"
#include "quditlab/version.hpp"

namespace py = pybind11;

namespace {

using quditlab::cxd;
using quditlab::Mat;

py::array_t<cxd> mat_to_array(const Mat& m) {
  py::array_t<cxd> out({m.rows, m.cols});
  auto buf = out.mutable_unchecked<2>();
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) buf(i, j) = m(i, j);
  }
  return out;
}

Mat array_to_mat(const py::array_t<cxd, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
  Mat m(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)));
  auto buf = a.unchecked<2>();
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) m(i, j) = buf(i, j);
  }
  return m;
}

quditlab::SeedOperator seed_from_array(const py::array_t<cxd>& x, int d) {
  return quditlab::seed_from_matrix(d, array_to_mat(x));
}

py::list kraus_to_list(const quditlab::KrausChannel& ch) {
  py::list out;
  for (const auto& k : ch.kraus) out.append(mat_to_array(k));
  return out;
}

quditlab::KrausChannel kraus_from_list(const py::list& ops, int d, int n) {
  quditlab::KrausChannel ch;
  ch.d = d;
  ch.n = n;
  for (const auto& item : ops) {
    ch.kraus.push_back(array_to_mat(py::cast<py::array_t<cxd>>(item)));
  }
  return ch;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "state estimation from parallel or conjugate qudit pairs";

  m.def("version", []() { return std::string(quditlab::kVersion); });
  m.def("bose_dim", &quditlab::bose_dim, py::arg("d"), py::arg("n"));
  m.def("estimation_bound", &quditlab::estimation_bound, py::arg("d"), py::arg("n"));

  m.def(
      "closed_forms_json",
      [](int d) {
        quditlab::ClosedForms f = quditlab::closed_forms(d);
        quditlab::json j{{"d", f.d},
                         {"f_parallel", f.f_parallel},
                         {"f_local", f.f_local},
                         {"f_perp", f.f_perp},
                         {"flags", f.flags}};
        return j.dump();
      },
      py::arg("d"));

  m.def(
      "build_seed",
      [](int d, double alpha, double beta, double gamma, double delta) {
        quditlab::SeedParams p{alpha, beta, gamma, delta};
        return mat_to_array(quditlab::build_seed(d, p).op);
      },
      py::arg("d"), py::arg("alpha"), py::arg("beta"), py::arg("gamma") = 0.0,
      py::arg("delta") = 0.0);

  m.def(
      "reference_operator",
      [](const std::string& name, int d) {
        return mat_to_array(quditlab::reference_operator(name, d).op);
      },
      py::arg("name"), py::arg("d"));
  m.def("reference_operator_names", &quditlab::reference_operator_names);

  m.def(
      "mean_fidelity",
      [](const py::array_t<cxd>& x, int d) {
        return quditlab::mean_fidelity(seed_from_array(x, d));
      },
      py::arg("x"), py::arg("d"));
  m.def(
      "mean_fidelity_params",
      [](int d, double alpha, double beta, double gamma, double delta) {
        quditlab::SeedParams p{alpha, beta, gamma, delta};
        return quditlab::mean_fidelity_params(d, p);
      },
      py::arg("d"), py::arg("alpha"), py::arg("beta"), py::arg("gamma") = 0.0,
      py::arg("delta") = 0.0);
  m.def(
      "mean_fidelity_mc",
      [](const py::array_t<cxd>& x, int d, std::int64_t samples,
         std::uint64_t seed, int threads) {
        quditlab::McEstimate e = quditlab::mean_fidelity_mc(
            seed_from_array(x, d), samples, quditlab::RngStream(seed), threads);
        return py::make_tuple(e.mean, e.std_error);
      },
      py::arg("x"), py::arg("d"), py::arg("samples") = 100000,
      py::arg("seed") = 0x5EEDC0DEULL, py::arg("threads") = 1);

  m.def(
      "completeness_residual_json",
      [](const py::array_t<cxd>& x, int d, int trials, std::uint64_t seed) {
        auto r = quditlab::completeness_residual(seed_from_array(x, d), trials,
                                                 quditlab::RngStream(seed));
        quditlab::json j{
            {"trace", r.trace}, {"swap", r.swap}, {"twirl_mc", r.twirl_mc}};
        return j.dump();
      },
      py::arg("x"), py::arg("d"), py::arg("trials") = 100,
      py::arg("seed") = 0x5EEDC0DEULL);

  m.def(
      "positivity_margin",
      [](const py::array_t<cxd>& x, int d, const std::string& c) {
        return quditlab::positivity_margin(seed_from_array(x, d),
                                           quditlab::parse_case(c));
      },
      py::arg("x"), py::arg("d"), py::arg("case"));

  m.def("moment_operator",
        [](int d) { return mat_to_array(quditlab::moment_operator(d)); },
        py::arg("d"));
  m.def(
      "sym_projector",
      [](int d, int n) { return mat_to_array(quditlab::sym_projector(d, n)); },
      py::arg("d"), py::arg("n"));
  m.def(
      "haar_unitary",
      [](int d, std::uint64_t seed) {
        quditlab::RngStream rng(seed);
        return mat_to_array(quditlab::haar_unitary(d, rng));
      },
      py::arg("d"), py::arg("seed") = 0x5EEDC0DEULL);

  m.def(
      "optimal_conjugator",
      [](int d, int n) { return kraus_to_list(quditlab::optimal_conjugator(d, n)); },
      py::arg("d"), py::arg("n"));
  m.def(
      "conjugation_fidelity",
      [](const py::list& kraus, int d, int n) {
        return quditlab::conjugation_fidelity(kraus_from_list(kraus, d, n));
      },
      py::arg("kraus"), py::arg("d"), py::arg("n"));
  m.def(
      "random_channel",
      [](int d, int n, int kraus_count, std::uint64_t seed) {
        quditlab::RngStream rng(seed);
        return kraus_to_list(quditlab::random_channel(d, n, kraus_count, rng));
      },
      py::arg("d"), py::arg("n"), py::arg("kraus_count"),
      py::arg("seed") = 0x5EEDC0DEULL);

  m.def(
      "optimize_json",
      [](int d, const std::string& c, int restarts, std::uint64_t seed,
         int threads) {
        quditlab::OptimizerConfig cfg;
        cfg.restarts = restarts;
        cfg.seed = seed;
        cfg.threads = threads;
        auto res = quditlab::optimize_seed(d, quditlab::parse_case(c), cfg);
        auto ver = quditlab::verify_result(res);
        return quditlab::optimize_results(res, ver).dump();
      },
      py::arg("d"), py::arg("case"), py::arg("restarts") = 20,
      py::arg("seed") = 0x5EEDC0DEULL, py::arg("threads") = 1);

  m.def(
      "simulate_json",
      [](int d, const std::string& c, const std::string& seed_op,
         std::int64_t samples, std::uint64_t seed, int threads) {
        auto res = quditlab::simulate(
            quditlab::reference_operator(seed_op, d), quditlab::parse_case(c),
            samples, quditlab::RngStream(seed), threads);
        return quditlab::simulate_results(res).dump();
      },
      py::arg("d"), py::arg("case"), py::arg("seed_op") = "case_one_opt",
      py::arg("samples") = 10000, py::arg("seed") = 0x5EEDC0DEULL,
      py::arg("threads") = 1);

  m.def(
      "table1_json",
      [](const std::vector<int>& d_list, std::int64_t samples, int mc_max_d,
         std::uint64_t seed, int threads) {
        quditlab::Table1Config cfg;
        cfg.d_list = d_list;
        cfg.mc_samples = samples;
        cfg.mc_max_d = mc_max_d;
        cfg.seed = seed;
        cfg.threads = threads;
        return quditlab::table1_results(quditlab::table1(cfg)).dump();
      },
      py::arg("d_list") = std::vector<int>{2, 3, 4, 5, 6, 11, 17},
      py::arg("samples") = 100000, py::arg("mc_max_d") = 4,
      py::arg("seed") = 0x5EEDC0DEULL, py::arg("threads") = 1);

  m.def(
      "hermitian_eigs",
      [](const py::array_t<cxd>& x) {
        auto eg = quditlab::hermitian_eigs(array_to_mat(x));
        py::array_t<double> vals(static_cast<py::ssize_t>(eg.values.size()));
        auto vb = vals.mutable_unchecked<1>();
        for (py::ssize_t i = 0; i < vals.shape(0); ++i) vb(i) = eg.values[i];
        return py::make_tuple(vals, mat_to_array(eg.vectors));
      },
      py::arg("x"));
}

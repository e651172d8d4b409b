// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include "quditlab/report.hpp"

#include <cstdio>

#include "quditlab/version.hpp"

namespace quditlab {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json make_report(const std::string& command, const json& config,
                 const json& results, const json& residuals,
                 const std::vector<std::string>& flags) {
  json rep;
  rep["command"] = command;
  rep["version"] = kVersion;
  rep["config"] = config;
  rep["results"] = results;
  rep["residuals"] = residuals;
  rep["flags"] = flags;
  // Hash of everything above; dump() emits keys sorted, so the digest is
  // stable for equal payloads.
  rep["payload_hash"] = hex64(fnv1a64(rep.dump()));
  return rep;
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

json mc_estimate_json(const McEstimate& e) {
  return json{{"mean", e.mean}, {"std_error", e.std_error}, {"samples", e.samples}};
}

json table1_results(const std::vector<Table1Row>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    json r;
    r["d"] = row.closed.d;
    r["f_parallel"] = row.closed.f_parallel;
    r["f_local"] = row.closed.f_local;
    r["f_perp"] = row.closed.f_perp;
    r["flags"] = row.closed.flags;
    if (row.mc) {
      r["mc"] = json{{"parallel", mc_estimate_json(row.mc->parallel)},
                     {"local", mc_estimate_json(row.mc->local)}};
    }
    arr.push_back(r);
  }
  return arr;
}

namespace {

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "d,f_parallel,f_local,f_perp,flag\n";
  for (const auto& row : rows) {
    out += std::to_string(row.closed.d);
    out += ',' + fixed4(row.closed.f_parallel);
    out += ',' + fixed4(row.closed.f_local);
    out += ',' + fixed4(row.closed.f_perp);
    out += ',';
    if (!row.closed.flags.empty()) {
      std::string joined;
      for (std::size_t i = 0; i < row.closed.flags.size(); ++i) {
        if (i) joined += "; ";
        joined += row.closed.flags[i];
      }
      out += csv_quote(joined);
    }
    out += '\n';
  }
  return out;
}

json optimize_results(const OptimizationResult& r, const VerifyReport& v) {
  json lines = json::array();
  for (const auto& line : v.lines) {
    lines.push_back(json{{"name", line.name},
                         {"value", line.value},
                         {"bound", line.bound},
                         {"sense", line.sense},
                         {"ok", line.ok}});
  }
  return json{{"d", r.d},
              {"case", case_name(r.meas_case)},
              {"params",
               {{"alpha", r.best.alpha},
                {"beta", r.best.beta},
                {"gamma", r.best.gamma},
                {"delta", r.best.delta}}},
              {"fidelity", r.fidelity},
              {"min_eig", r.min_eig},
              {"distance_to",
               {{"f_parallel", r.dist_f_parallel},
                {"f_local", r.dist_f_local},
                {"f_perp", r.dist_f_perp}}},
              {"evaluations", r.evaluations},
              {"restarts", r.restarts},
              {"verify", json{{"ok", v.ok}, {"lines", lines}}}};
}

json simulate_results(const SimulationResult& r) {
  return json{{"d", r.d},
              {"case", case_name(r.meas_case)},
              {"accepted", r.accepted},
              {"proposals", r.proposals},
              {"acceptance_rate", r.acceptance_rate},
              {"empirical_fidelity", r.mean},
              {"std_error", r.std_error},
              {"exact_fidelity", r.exact}};
}

}  // namespace quditlab

// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include <doctest.h>

#include "quditlab/optimizer.hpp"
#include "quditlab/report.hpp"
#include "quditlab/sampler.hpp"
#include "quditlab/version.hpp"

using namespace quditlab;

TEST_CASE("fnv1a matches the published test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("hex64 is fixed width lowercase") {
  CHECK(hex64(0) == "0000000000000000");
  CHECK(hex64(0xabcdef0123456789ULL) == "abcdef0123456789");
  CHECK(hex64(1) == "0000000000000001");
}

TEST_CASE("report envelope is deterministic and hash-stable") {
  json config{{"d", 2}, {"seed", 7}};
  json results{{"value", 0.75}};
  json a = make_report("probe", config, results, json::object(), {"note"});
  json b = make_report("probe", config, results, json::object(), {"note"});
  CHECK(render_json(a) == render_json(b));
  CHECK(a["payload_hash"] == b["payload_hash"]);
  CHECK(a["version"] == kVersion);

  json c = make_report("probe", json{{"d", 3}, {"seed", 7}}, results,
                       json::object(), {"note"});
  CHECK(a["payload_hash"] != c["payload_hash"]);
}

TEST_CASE("payload hash covers everything but itself") {
  json config{{"x", 1}};
  json rep = make_report("cmd", config, json::object(), json::object(), {});
  std::string hash = rep["payload_hash"];
  json copy = rep;
  copy.erase("payload_hash");
  CHECK(hex64(fnv1a64(copy.dump())) == hash);
}

TEST_CASE("table csv has fixed four-decimal cells") {
  Table1Config cfg;
  cfg.d_list = {2, 6};
  cfg.mc_samples = 0;  // closed forms only
  auto rows = table1(cfg);
  std::string csv = table1_csv(rows);
  CHECK(csv.find("d,f_parallel,f_local,f_perp,flag\n") == 0);
  CHECK(csv.find("2,0.7500,0.7887,0.7887,\n") != std::string::npos);
  CHECK(csv.find("6,0.3750,0.4105,0.4137,\"") != std::string::npos);
  CHECK(csv.find("0.4195") != std::string::npos);  // flagged published value
}

TEST_CASE("table json rows mirror the closed forms") {
  Table1Config cfg;
  cfg.d_list = {3};
  cfg.mc_samples = 4096;
  cfg.mc_max_d = 4;
  auto rows = table1(cfg);
  json arr = table1_results(rows);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["d"] == 3);
  CHECK(arr[0]["f_parallel"].get<double>() == doctest::Approx(0.6));
  CHECK(arr[0].contains("mc"));
  CHECK(arr[0]["mc"]["parallel"]["samples"] == 4096);
}

TEST_CASE("optimizer and simulation records serialize completely") {
  OptimizationResult r = optimize_seed(2, MeasCase::parallel, {});
  VerifyReport v = verify_result(r);
  json jr = optimize_results(r, v);
  CHECK(jr["case"] == "parallel");
  CHECK(jr["params"].contains("alpha"));
  CHECK(jr["verify"]["ok"] == true);
  CHECK(jr["verify"]["lines"].size() == v.lines.size());
  CHECK(jr["distance_to"].contains("f_perp"));

  SimulationResult sim = simulate(reference_operator("identity", 2),
                                  MeasCase::parallel, 4096, RngStream(1));
  json js = simulate_results(sim);
  CHECK(js["accepted"] == 4096);
  CHECK(js["acceptance_rate"].get<double>() == 1.0);
  CHECK(js.contains("empirical_fidelity"));
  CHECK(js.contains("exact_fidelity"));
}

TEST_CASE("csv quoting doubles embedded quotes") {
  Table1Config cfg;
  cfg.d_list = {6};
  cfg.mc_samples = 0;
  auto rows = table1(cfg);
  rows[0].closed.flags = {"say \"hi\", twice"};
  std::string csv = table1_csv(rows);
  CHECK(csv.find("\"say \"\"hi\"\", twice\"") != std::string::npos);
}

// Copyright (c) 2026 quditlab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "quditlab/fidelity.hpp"
#include "quditlab/optimizer.hpp"
#include "quditlab/sampler.hpp"

namespace quditlab {

using json = nlohmann::json;

std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

// Report envelope shared by every subcommand. No timestamps or host state:
// the same config must serialize to the same bytes.
json make_report(const std::string& command, const json& config,
                 const json& results, const json& residuals,
                 const std::vector<std::string>& flags);

std::string render_json(const json& report);

json table1_results(const std::vector<Table1Row>& rows);
std::string table1_csv(const std::vector<Table1Row>& rows);

json optimize_results(const OptimizationResult& r, const VerifyReport& v);
json simulate_results(const SimulationResult& r);

json mc_estimate_json(const McEstimate& e);

}  // namespace quditlab

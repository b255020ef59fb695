// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lecedit/baselines.hpp"
#include "lecedit/metrics.hpp"
#include "lecedit/scenario.hpp"
#include "lecedit/solver.hpp"

namespace lecedit::tools {

struct PipelineOptions {
    std::uint64_t seed = 1;
    int jobs = 1;
    int randseg_n = 30;
    SolveMode optimizer = SolveMode::paper_dp;  // solver behind the Optim rows
    int exact_l_cap = 0;
    std::vector<std::string> methods;  // empty = the full benchmark row set
};

struct PipelineCell {
    std::string scenario;
    std::string method;
    bool ok = false;
    std::string error;
    MetricsReport report;
    EditDecisionList edl;
};

struct PipelineResult {
    std::vector<std::string> methods;
    std::vector<PipelineCell> cells;  // scenario-major, method order as in `methods`
    std::vector<ComparisonRow> aggregate;
    bool all_ok = false;
};

/// The benchmark row set: the three reference editors, the exact offline
/// solve, and the optimizer at look-aheads 1, l_min/2, l_min and infinity.
std::vector<std::string> pipeline_methods(const EditConfig& cfg, int randseg_n = 30);

/// Runs every (scenario, method) cell, then averages per method across
/// scenarios. Failures are confined to their cell. Randomized methods draw
/// per-cell child seeds from opts.seed, so results are independent of the
/// execution order and job count.
PipelineResult run_pipeline(std::span<const Scenario> scenarios, const EditConfig& cfg,
                            const PipelineOptions& opts);

// Baseline params file support for the `baseline` subcommand; every field
// is optional and falls back to the defaults above.
BaselineParams baseline_params_from_json(const nlohmann::json& j, const Scenario& s,
                                         const EditConfig& cfg);

nlohmann::json report_to_json(const MetricsReport& r);
MetricsReport report_from_json(const nlohmann::json& j);

}  // namespace lecedit::tools

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lecedit/edit_config.hpp"

namespace lecedit::tools {

/// Provenance record written next to every command's outputs. Timings are
/// wall clock and therefore excluded from byte-determinism guarantees; all
/// other fields are reproducible.
struct RunManifest {
    std::string command;
    std::string tool_version;
    std::uint64_t seed = 0;
    std::string config_hash;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<std::pair<std::string, double>> timings_ms;
};

std::string config_hash(const EditConfig& cfg);

/// Writes `<out_stem>.manifest.json`.
void write_manifest(const RunManifest& m, const std::filesystem::path& out_stem);

class StageTimer {
  public:
    explicit StageTimer(RunManifest& manifest) : manifest_(manifest) { reset(); }

    void reset() { start_ = std::chrono::steady_clock::now(); }

    void record(const std::string& stage) {
        const auto now = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(now - start_)
                .count();
        manifest_.timings_ms.emplace_back(stage, ms);
        start_ = now;
    }

  private:
    RunManifest& manifest_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace lecedit::tools

// SPDX-License-Identifier: Apache-2.0
#include "manifest.hpp"

#include <json.hpp>

#include "lecedit/json_io.hpp"
#include "lecedit/version.hpp"

namespace lecedit::tools {

std::string config_hash(const EditConfig& cfg) {
    const std::string text = canonical_json(config_to_json(cfg));
    return hex64(fnv1a_hash(std::span<const char>(text.data(), text.size())));
}

void write_manifest(const RunManifest& m, const std::filesystem::path& out_stem) {
    nlohmann::json j;
    j["command"] = m.command;
    j["tool_version"] = m.tool_version.empty() ? kVersion : m.tool_version;
    j["seed"] = m.seed;
    j["config_hash"] = m.config_hash;
    j["inputs"] = m.inputs;
    j["outputs"] = m.outputs;
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& [stage, ms] : m.timings_ms) timings[stage] = ms;
    j["timings_ms"] = std::move(timings);

    std::filesystem::path p = out_stem;
    p += ".manifest.json";
    write_text_file(p, canonical_json(j));
}

}  // namespace lecedit::tools

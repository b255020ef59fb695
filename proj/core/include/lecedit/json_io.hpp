// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include <json.hpp>

#include "lecedit/edit_config.hpp"
#include "lecedit/edl.hpp"
#include "lecedit/scenario.hpp"
#include "lecedit/simgen.hpp"

namespace lecedit {

// In-memory conversions. All *_from_json functions throw ParseError with
// field context on schema breaches; unknown config fields are rejected.
nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const EditConfig& cfg);
EditConfig config_from_json(const nlohmann::json& j);
nlohmann::json edl_to_json(const EditDecisionList& edl);
EditDecisionList edl_from_json(const nlohmann::json& j);
nlohmann::json script_to_json(const EventScript& script);
EventScript script_from_json(const nlohmann::json& j);

/// Canonical text form: sorted keys, 2-space indent, trailing newline.
/// Loading and re-dumping a canonical file reproduces it byte for byte.
std::string canonical_json(const nlohmann::json& j);

// File round trips. Loaders validate invariants and throw ValidationError
// on breaches; savers write canonical form.
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);
EditConfig load_config(const std::filesystem::path& path);
void save_config(const EditConfig& cfg, const std::filesystem::path& path);
EditDecisionList load_edl(const std::filesystem::path& path);
void save_edl(const EditDecisionList& edl, const std::filesystem::path& path);
EventScript load_script(const std::filesystem::path& path);
void save_script(const EventScript& script, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// FNV-1a over raw bytes; used for config hashes and golden fingerprints.
std::uint64_t fnv1a_hash(std::span<const char> bytes);
std::string hex64(std::uint64_t value);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace lecedit

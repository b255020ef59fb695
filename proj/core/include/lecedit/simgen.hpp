// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lecedit/scenario.hpp"

namespace lecedit {

/// Scripted classroom happenings; each maps to marks on one or two cameras.
enum class EventKind {
    writing_lb,            // -> lb indicator
    writing_rb,            // -> rb indicator
    slide_change,          // -> sc indicator
    student_motion,        // -> sl indicator
    visitor_in_ms,         // -> lm and rm indicators
    presenter_off_podium,  // -> ol indicator
};

std::string_view to_string(EventKind k);
std::optional<EventKind> event_kind_from_string(std::string_view s);

struct ScriptEvent {
    EventKind kind = EventKind::slide_change;
    int start = 0;
    int duration = 1;
};

/// Per-stream Gaussian noise deviations.
struct NoiseLevels {
    double frames = 0.02;
    double flow = 0.05;
    double scalar = 0.02;
    double counts = 0.05;
    double positions = 0.02;

    static NoiseLevels zero() { return NoiseLevels{0.0, 0.0, 0.0, 0.0, 0.0}; }
};

struct EventScript {
    int T = 0;
    std::vector<ScriptEvent> events;
    NoiseLevels noise;
    std::uint64_t seed = 1;
};

std::vector<std::string> validate_script(const EventScript& script);

/// Whether generate() also synthesizes the raw feature streams (frames,
/// flow, counts, positions, probabilities) consistent with the indicators.
enum class FeatureSynthesis { full, none };

/// Builds the seven-camera scenario for a script: indicators straight from
/// the event intervals, plus feature streams designed so the matching
/// detectors recover those indicators. Each stream uses its own child seed,
/// so indicators are identical with or without feature synthesis.
/// Throws ValidationError on an invalid script.
Scenario generate(const EventScript& script, FeatureSynthesis features = FeatureSynthesis::full);

/// Ten seeded lecture scripts of T = 3000 with event counts and durations
/// drawn from fixed ranges (documented in the implementation), spaced so
/// every event is recoverable by the detectors.
std::vector<EventScript> benchmark_scripts(std::uint64_t seed);

/// generate() applied to benchmark_scripts().
std::vector<Scenario> benchmark_suite(std::uint64_t seed,
                                      FeatureSynthesis features = FeatureSynthesis::full);

/// Fraction of scripted indicator marks that have a detected mark within
/// +-tolerance instances; 1.0 when the scenario has no scripted marks.
double mark_recall(const Scenario& scripted, const Scenario& detected, int tolerance);

}  // namespace lecedit

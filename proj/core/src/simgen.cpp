// SPDX-License-Identifier: Apache-2.0
#include "lecedit/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lecedit/errors.hpp"
#include "lecedit/rng.hpp"

namespace lecedit {
namespace {

constexpr int kGrid = 32;        // synthesized frame/flow resolution
constexpr double kBlockFlow = 6.0;  // coherent motion amplitude during events

std::vector<int> target_cameras(EventKind k) {
    switch (k) {
        case EventKind::writing_lb: return {static_cast<int>(ShotKind::LeftBlackboardCloseUp)};
        case EventKind::writing_rb: return {static_cast<int>(ShotKind::RightBlackboardCloseUp)};
        case EventKind::slide_change: return {static_cast<int>(ShotKind::SlideCloseUp)};
        case EventKind::student_motion: return {static_cast<int>(ShotKind::StudentLong)};
        case EventKind::visitor_in_ms:
            return {static_cast<int>(ShotKind::LeftMedium), static_cast<int>(ShotKind::RightMedium)};
        case EventKind::presenter_off_podium:
            return {static_cast<int>(ShotKind::OverviewLong)};
    }
    return {};
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

FrameGrid random_pattern(Rng& rng) {
    FrameGrid g;
    g.rows = kGrid;
    g.cols = kGrid;
    g.channels = 1;
    g.values.resize(static_cast<std::size_t>(kGrid) * kGrid);
    for (double& v : g.values) v = uniform01(rng);
    return g;
}

}  // namespace

std::string_view to_string(EventKind k) {
    switch (k) {
        case EventKind::writing_lb: return "writing_lb";
        case EventKind::writing_rb: return "writing_rb";
        case EventKind::slide_change: return "slide_change";
        case EventKind::student_motion: return "student_motion";
        case EventKind::visitor_in_ms: return "visitor_in_ms";
        case EventKind::presenter_off_podium: return "presenter_off_podium";
    }
    return "?";
}

std::optional<EventKind> event_kind_from_string(std::string_view s) {
    for (EventKind k : {EventKind::writing_lb, EventKind::writing_rb, EventKind::slide_change,
                        EventKind::student_motion, EventKind::visitor_in_ms,
                        EventKind::presenter_off_podium})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

std::vector<std::string> validate_script(const EventScript& script) {
    std::vector<std::string> out;
    if (script.T < 1) out.push_back("script T must be >= 1");
    for (std::size_t i = 0; i < script.events.size(); ++i) {
        const ScriptEvent& e = script.events[i];
        if (e.duration < 1)
            out.push_back("event " + std::to_string(i) + " duration must be >= 1");
        if (e.start < 0 || e.start >= script.T)
            out.push_back("event " + std::to_string(i) + " start outside [0, T)");
        else if (e.start + e.duration > script.T)
            out.push_back("event " + std::to_string(i) + " runs past the timeline end");
    }
    for (double level : {script.noise.frames, script.noise.flow, script.noise.scalar,
                         script.noise.counts, script.noise.positions})
        if (!(level >= 0.0)) out.push_back("noise levels must be >= 0");
    return out;
}

Scenario generate(const EventScript& script, FeatureSynthesis features) {
    const auto problems = validate_script(script);
    if (!problems.empty())
        throw ValidationError("invalid event script: " + problems.front());

    Scenario s;
    s.instances_per_second = 1.0;
    s.T = script.T;
    for (ShotKind k : all_shot_kinds) {
        Camera cam;
        cam.id = std::string(to_string(k));
        cam.kind = k;
        cam.indicator.assign(static_cast<std::size_t>(script.T), 0);
        s.cameras.push_back(std::move(cam));
    }

    for (const ScriptEvent& e : script.events)
        for (int cam : target_cameras(e.kind))
            for (int t = e.start; t < e.start + e.duration && t < script.T; ++t)
                s.cameras[cam].indicator[t] = 1;

    if (features == FeatureSynthesis::none) return s;

    // Every stream derives its own child seed, so dropping or adding feature
    // synthesis never perturbs the other streams or the indicators.
    const NoiseLevels& nz = script.noise;

    for (ShotKind k : {ShotKind::LeftBlackboardCloseUp, ShotKind::RightBlackboardCloseUp}) {
        Camera& cam = s.cameras[index_of(k)];
        Rng rng(mix_seed(script.seed, index_of(k)));
        cam.features.scalar.resize(static_cast<std::size_t>(script.T));
        for (int t = 0; t < script.T; ++t) {
            const double base = cam.indicator[t] ? 0.95 : 0.05;
            cam.features.scalar[t] = clamp01(base + normal(rng, 0.0, nz.scalar));
        }
    }

    {
        Camera& cam = s.cameras[index_of(ShotKind::SlideCloseUp)];
        Rng rng(mix_seed(script.seed, index_of(ShotKind::SlideCloseUp)));
        cam.features.frames.reserve(static_cast<std::size_t>(script.T));
        FrameGrid page = random_pattern(rng);
        for (int t = 0; t < script.T; ++t) {
            if (cam.indicator[t]) page = random_pattern(rng);  // visible change each marked instant
            FrameGrid frame = page;
            if (nz.frames > 0.0)
                for (double& v : frame.values) v += normal(rng, 0.0, nz.frames);
            cam.features.frames.push_back(std::move(frame));
        }
    }

    {
        Camera& cam = s.cameras[index_of(ShotKind::StudentLong)];
        Rng rng(mix_seed(script.seed, index_of(ShotKind::StudentLong)));
        cam.features.flow.reserve(static_cast<std::size_t>(script.T));
        for (int t = 0; t < script.T; ++t) {
            FlowField f;
            f.rows = kGrid;
            f.cols = kGrid;
            f.u.assign(static_cast<std::size_t>(kGrid) * kGrid, 0.0);
            f.v.assign(static_cast<std::size_t>(kGrid) * kGrid, 0.0);
            if (nz.flow > 0.0) {
                for (double& x : f.u) x = normal(rng, 0.0, nz.flow);
                for (double& x : f.v) x = normal(rng, 0.0, nz.flow);
            }
            if (cam.indicator[t]) {
                // A block of pixels moving together: its boundary dominates
                // the orientation histogram and the entropy collapses.
                for (int r = kGrid / 4; r < 3 * kGrid / 4; ++r)
                    for (int c = kGrid / 4; c < 3 * kGrid / 4; ++c)
                        f.u[static_cast<std::size_t>(r) * kGrid + c] += kBlockFlow;
            }
            cam.features.flow.push_back(std::move(f));
        }
    }

    for (ShotKind k : {ShotKind::LeftMedium, ShotKind::RightMedium}) {
        Camera& cam = s.cameras[index_of(k)];
        Rng rng(mix_seed(script.seed, index_of(k)));
        cam.features.counts.resize(static_cast<std::size_t>(script.T));
        for (int t = 0; t < script.T; ++t) {
            const double base = cam.indicator[t] ? 2.0 : 1.0;
            cam.features.counts[t] =
                std::max(0, static_cast<int>(std::llround(base + normal(rng, 0.0, nz.counts))));
        }
    }

    {
        Camera& cam = s.cameras[index_of(ShotKind::OverviewLong)];
        Rng rng(mix_seed(script.seed, index_of(ShotKind::OverviewLong)));
        cam.features.positions.resize(static_cast<std::size_t>(script.T));
        for (int t = 0; t < script.T; ++t) {
            const double base = cam.indicator[t] ? 0.92 : 0.5;
            cam.features.positions[t] = clamp01(base + normal(rng, 0.0, nz.positions));
        }
    }

    return s;
}

namespace {

struct EventRange {
    EventKind kind;
    int count_lo, count_hi;
    int dur_lo, dur_hi;
    int gap;  // clearance kept around events on the same stream
};

// Documented draw ranges for the benchmark suite. Gaps keep each mark
// recoverable: the slide detector needs a clean autoregression window and
// the motion detector a clean leading score window.
constexpr EventRange kSuiteRanges[] = {
    {EventKind::writing_lb, 2, 4, 20, 60, 20},
    {EventKind::writing_rb, 1, 3, 20, 60, 20},
    {EventKind::slide_change, 8, 15, 1, 2, 60},
    {EventKind::student_motion, 2, 4, 8, 16, 60},
    {EventKind::visitor_in_ms, 1, 3, 30, 80, 20},
    {EventKind::presenter_off_podium, 1, 2, 20, 50, 20},
};

bool overlaps(const std::vector<std::pair<int, int>>& taken, int lo, int hi) {
    for (const auto& [a, b] : taken)
        if (lo < b && a < hi) return true;
    return false;
}

}  // namespace

std::vector<EventScript> benchmark_scripts(std::uint64_t seed) {
    constexpr int kT = 3000;
    constexpr int kScenarios = 10;
    constexpr int kStartMargin = 80;  // clears detector warm-up windows
    constexpr int kEndMargin = 100;

    std::vector<EventScript> scripts;
    scripts.reserve(kScenarios);
    for (int i = 0; i < kScenarios; ++i) {
        EventScript script;
        script.T = kT;
        script.seed = mix_seed(seed, 0x5eedull, static_cast<std::uint64_t>(i));
        script.noise = NoiseLevels{};

        Rng rng(mix_seed(seed, 0x9a7ce11ull, static_cast<std::uint64_t>(i)));
        // occupancy per camera stream so same-stream events keep their gap
        std::array<std::vector<std::pair<int, int>>, kShotKindCount> taken;

        for (const EventRange& er : kSuiteRanges) {
            const int count = uniform_int(rng, er.count_lo, er.count_hi);
            for (int e = 0; e < count; ++e) {
                for (int attempt = 0; attempt < 200; ++attempt) {
                    const int dur = uniform_int(rng, er.dur_lo, er.dur_hi);
                    const int start = uniform_int(rng, kStartMargin, kT - kEndMargin - dur);
                    bool free = true;
                    for (int cam : target_cameras(er.kind))
                        if (overlaps(taken[cam], start - er.gap, start + dur + er.gap))
                            free = false;
                    if (!free) continue;
                    for (int cam : target_cameras(er.kind))
                        taken[cam].push_back({start, start + dur});
                    script.events.push_back({er.kind, start, dur});
                    break;
                }
            }
        }
        std::stable_sort(script.events.begin(), script.events.end(),
                         [](const ScriptEvent& a, const ScriptEvent& b) {
                             return a.start != b.start ? a.start < b.start
                                                       : static_cast<int>(a.kind) <
                                                             static_cast<int>(b.kind);
                         });
        scripts.push_back(std::move(script));
    }
    return scripts;
}

std::vector<Scenario> benchmark_suite(std::uint64_t seed, FeatureSynthesis features) {
    std::vector<Scenario> out;
    for (const EventScript& script : benchmark_scripts(seed))
        out.push_back(generate(script, features));
    return out;
}

double mark_recall(const Scenario& scripted, const Scenario& detected, int tolerance) {
    long long total = 0, hit = 0;
    for (int c = 0; c < scripted.camera_count() && c < detected.camera_count(); ++c) {
        const auto& truth = scripted.cameras[c].indicator;
        const auto& got = detected.cameras[c].indicator;
        for (std::size_t t = 0; t < truth.size(); ++t) {
            if (truth[t] != 1) continue;
            ++total;
            const std::size_t lo = t >= static_cast<std::size_t>(tolerance) ? t - tolerance : 0;
            const std::size_t hi = std::min(t + tolerance, got.size() - 1);
            for (std::size_t u = lo; u <= hi; ++u)
                if (got[u] == 1) {
                    ++hit;
                    break;
                }
        }
    }
    return total == 0 ? 1.0 : static_cast<double>(hit) / total;
}

}  // namespace lecedit

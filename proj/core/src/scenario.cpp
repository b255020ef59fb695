// SPDX-License-Identifier: Apache-2.0
#include "lecedit/scenario.hpp"

#include <cmath>
#include <set>
#include <string>

namespace lecedit {
namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

void check_stream_length(std::vector<Violation>& out, const Camera& cam, const char* stream,
                         std::size_t got, int T) {
    if (got != static_cast<std::size_t>(T))
        out.push_back({cam.id, -1,
                       std::string(stream) + " stream has " + std::to_string(got) +
                           " entries, expected T=" + std::to_string(T)});
}

}  // namespace

std::vector<Violation> validate_scenario(const Scenario& s) {
    std::vector<Violation> out;

    if (s.T < 1) out.push_back({"", -1, "timeline length T must be >= 1, got " + std::to_string(s.T)});
    if (s.cameras.empty()) out.push_back({"", -1, "scenario has no cameras"});
    if (!(s.instances_per_second > 0.0))
        out.push_back({"", -1, "instances_per_second must be > 0"});

    std::set<std::string> seen;
    for (const Camera& cam : s.cameras) {
        if (!seen.insert(cam.id).second)
            out.push_back({cam.id, -1, "duplicate camera id"});

        if (cam.indicator.size() != static_cast<std::size_t>(s.T)) {
            out.push_back({cam.id, -1,
                           "indicator has " + std::to_string(cam.indicator.size()) +
                               " entries, expected T=" + std::to_string(s.T)});
        }
        for (std::size_t t = 0; t < cam.indicator.size(); ++t) {
            const int v = cam.indicator[t];
            if (v != 0 && v != 1)
                out.push_back({cam.id, static_cast<int>(t),
                               "indicator entry " + std::to_string(v) + " outside {0,1}"});
        }

        const FeatureStreams& f = cam.features;
        if (!f.frames.empty()) {
            check_stream_length(out, cam, "frames", f.frames.size(), s.T);
            for (std::size_t t = 0; t < f.frames.size(); ++t) {
                const FrameGrid& g = f.frames[t];
                if (g.rows < 2 || g.cols < 2)
                    out.push_back({cam.id, static_cast<int>(t), "frame grid smaller than 2x2"});
                if (g.channels != 1 && g.channels != 3)
                    out.push_back({cam.id, static_cast<int>(t), "frame channels must be 1 or 3"});
                if (g.values.size() !=
                    static_cast<std::size_t>(g.rows) * g.cols * g.channels)
                    out.push_back({cam.id, static_cast<int>(t), "frame value count mismatch"});
                else if (!all_finite(g.values))
                    out.push_back({cam.id, static_cast<int>(t), "frame contains non-finite values"});
                if (t > 0 && !f.frames[t].same_shape(f.frames[0]))
                    out.push_back({cam.id, static_cast<int>(t), "frame shape differs from frame 0"});
            }
        }
        if (!f.flow.empty()) {
            check_stream_length(out, cam, "flow", f.flow.size(), s.T);
            for (std::size_t t = 0; t < f.flow.size(); ++t) {
                const FlowField& fl = f.flow[t];
                const auto n = static_cast<std::size_t>(fl.rows) * fl.cols;
                if (fl.rows < 2 || fl.cols < 2)
                    out.push_back({cam.id, static_cast<int>(t), "flow field smaller than 2x2"});
                if (fl.u.size() != n || fl.v.size() != n)
                    out.push_back({cam.id, static_cast<int>(t), "flow u/v size mismatch"});
                else if (!all_finite(fl.u) || !all_finite(fl.v))
                    out.push_back({cam.id, static_cast<int>(t), "flow contains non-finite values"});
            }
        }
        if (!f.scalar.empty()) {
            check_stream_length(out, cam, "scalar", f.scalar.size(), s.T);
            for (std::size_t t = 0; t < f.scalar.size(); ++t)
                if (!std::isfinite(f.scalar[t]))
                    out.push_back({cam.id, static_cast<int>(t), "scalar entry not finite"});
        }
        if (!f.counts.empty()) {
            check_stream_length(out, cam, "counts", f.counts.size(), s.T);
            for (std::size_t t = 0; t < f.counts.size(); ++t)
                if (f.counts[t] < 0)
                    out.push_back({cam.id, static_cast<int>(t), "count entry negative"});
        }
        if (!f.positions.empty()) {
            check_stream_length(out, cam, "positions", f.positions.size(), s.T);
            for (std::size_t t = 0; t < f.positions.size(); ++t)
                if (!std::isfinite(f.positions[t]))
                    out.push_back({cam.id, static_cast<int>(t), "position entry not finite"});
        }
    }
    return out;
}

}  // namespace lecedit

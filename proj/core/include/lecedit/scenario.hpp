// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lecedit/shot_kind.hpp"

namespace lecedit {

/// Dense pixel grid with 1 or 3 channels, row-major, channel-interleaved.
struct FrameGrid {
    int rows = 0;
    int cols = 0;
    int channels = 1;
    std::vector<double> values;

    double at(int r, int c, int ch = 0) const {
        return values[(static_cast<std::size_t>(r) * cols + c) * channels + ch];
    }
    double& at(int r, int c, int ch = 0) {
        return values[(static_cast<std::size_t>(r) * cols + c) * channels + ch];
    }
    bool same_shape(const FrameGrid& o) const {
        return rows == o.rows && cols == o.cols && channels == o.channels;
    }
};

/// Per-pixel displacement field (horizontal u, vertical v), row-major.
struct FlowField {
    int rows = 0;
    int cols = 0;
    std::vector<double> u;
    std::vector<double> v;

    double u_at(int r, int c) const { return u[static_cast<std::size_t>(r) * cols + c]; }
    double v_at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
};

/// Optional per-camera raw inputs; an empty vector means the stream is absent.
/// Every present stream has exactly one entry per time instance.
struct FeatureStreams {
    std::vector<FrameGrid> frames;
    std::vector<FlowField> flow;
    std::vector<double> scalar;
    std::vector<int> counts;
    std::vector<double> positions;

    bool empty() const {
        return frames.empty() && flow.empty() && scalar.empty() && counts.empty() &&
               positions.empty();
    }
};

/// One synchronized stream: identity, shot type, binary event indicator and
/// optional raw features. Indicator entries are stored as plain ints so that
/// out-of-domain values survive loading and can be reported by validation.
struct Camera {
    std::string id;
    ShotKind kind = ShotKind::OverviewLong;
    std::vector<int> indicator;
    FeatureStreams features;
};

/// A full multi-camera recording session on a shared discrete timeline of
/// `T` instances. Immutable by convention once built; all queries are const.
struct Scenario {
    double instances_per_second = 1.0;
    int T = 0;
    std::vector<Camera> cameras;

    int camera_count() const { return static_cast<int>(cameras.size()); }

    /// Index of the camera with the given id, or -1.
    int index_of(std::string_view id) const {
        for (std::size_t i = 0; i < cameras.size(); ++i)
            if (cameras[i].id == id) return static_cast<int>(i);
        return -1;
    }
};

/// A single invariant breach. `camera` / `t` are empty / -1 when the fault
/// is not tied to a camera or time instance.
struct Violation {
    std::string camera;
    int t = -1;
    std::string message;
};

/// Checks every scenario invariant and returns the breaches as data.
/// Never throws on a structurally well-formed Scenario.
std::vector<Violation> validate_scenario(const Scenario& s);

}  // namespace lecedit

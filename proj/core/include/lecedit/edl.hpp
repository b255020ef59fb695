// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

namespace lecedit {

/// Half-open slice of the timeline assigned to one camera.
struct Segment {
    std::string camera;
    int start = 0;  // inclusive
    int end = 0;    // exclusive

    int length() const { return end - start; }
    bool operator==(const Segment&) const = default;
};

/// Ordered, gap-free, overlap-free cover of [0, T); adjacent segments always
/// name different cameras.
struct EditDecisionList {
    std::vector<Segment> segments;

    int cut_count() const {
        return segments.empty() ? 0 : static_cast<int>(segments.size()) - 1;
    }
    int total_length() const {
        return segments.empty() ? 0 : segments.back().end - segments.front().start;
    }
    bool operator==(const EditDecisionList&) const = default;
};

/// Invariant check; pass T < 0 when the expected cover length is unknown.
std::vector<std::string> validate_edl(const EditDecisionList& edl, int T);

/// Run-length encodes a per-instance camera-index sequence.
EditDecisionList edl_from_sequence(std::span<const int> sequence,
                                   std::span<const std::string> camera_ids);

/// Expands an EDL back to camera indices; throws if the EDL does not cover
/// [0, T) or names an unknown camera.
std::vector<int> sequence_from_edl(const EditDecisionList& edl,
                                   std::span<const std::string> camera_ids, int T);

}  // namespace lecedit

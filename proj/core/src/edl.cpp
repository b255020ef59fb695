// SPDX-License-Identifier: Apache-2.0
#include "lecedit/edl.hpp"

#include <stdexcept>
#include <string>

#include "lecedit/errors.hpp"

namespace lecedit {

std::vector<std::string> validate_edl(const EditDecisionList& edl, int T) {
    std::vector<std::string> out;
    const auto& segs = edl.segments;

    if (segs.empty()) {
        if (T > 0) out.push_back("EDL is empty but timeline has T=" + std::to_string(T));
        return out;
    }
    if (segs.front().start != 0)
        out.push_back("first segment starts at " + std::to_string(segs.front().start) +
                      ", expected 0");
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& seg = segs[i];
        if (seg.start >= seg.end)
            out.push_back("segment " + std::to_string(i) + " is empty or reversed [" +
                          std::to_string(seg.start) + ", " + std::to_string(seg.end) + ")");
        if (i > 0) {
            if (seg.start != segs[i - 1].end)
                out.push_back("segment " + std::to_string(i) + " starts at " +
                              std::to_string(seg.start) + " but previous one ends at " +
                              std::to_string(segs[i - 1].end));
            if (seg.camera == segs[i - 1].camera)
                out.push_back("segments " + std::to_string(i - 1) + " and " + std::to_string(i) +
                              " share camera '" + seg.camera + "'");
        }
    }
    if (T >= 0 && segs.back().end != T)
        out.push_back("EDL ends at " + std::to_string(segs.back().end) + ", expected T=" +
                      std::to_string(T));
    return out;
}

EditDecisionList edl_from_sequence(std::span<const int> sequence,
                                   std::span<const std::string> camera_ids) {
    EditDecisionList edl;
    for (std::size_t t = 0; t < sequence.size(); ++t) {
        const int c = sequence[t];
        if (c < 0 || static_cast<std::size_t>(c) >= camera_ids.size())
            throw std::out_of_range("camera index " + std::to_string(c) +
                                    " outside [0, " + std::to_string(camera_ids.size()) + ")");
        if (!edl.segments.empty() && edl.segments.back().camera == camera_ids[c]) {
            edl.segments.back().end = static_cast<int>(t) + 1;
        } else {
            edl.segments.push_back({camera_ids[c], static_cast<int>(t), static_cast<int>(t) + 1});
        }
    }
    return edl;
}

std::vector<int> sequence_from_edl(const EditDecisionList& edl,
                                   std::span<const std::string> camera_ids, int T) {
    const auto problems = validate_edl(edl, T);
    if (!problems.empty()) throw ValidationError("invalid EDL: " + problems.front());

    std::vector<int> seq(static_cast<std::size_t>(T), -1);
    for (const Segment& seg : edl.segments) {
        int idx = -1;
        for (std::size_t i = 0; i < camera_ids.size(); ++i)
            if (camera_ids[i] == seg.camera) { idx = static_cast<int>(i); break; }
        if (idx < 0) throw ValidationError("EDL names unknown camera '" + seg.camera + "'");
        for (int t = seg.start; t < seg.end; ++t) seq[t] = idx;
    }
    return seq;
}

}  // namespace lecedit

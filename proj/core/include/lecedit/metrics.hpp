// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "lecedit/edl.hpp"
#include "lecedit/scoring.hpp"

namespace lecedit {

/// The five production statistics of one edit.
struct MetricsReport {
    std::string method;
    double r_avg = 0.0;    // mean per-instance objective reward
    double r_max = 0.0;    // fraction of instances on the top-scoring camera
    double r_trans = 1.0;  // fraction of favorable cuts (1.0 when cut-free)
    int n_sw = 0;          // number of cuts
    double l_avg = 0.0;    // mean segment length = T / (n_sw + 1)
    int timeline = 0;      // T, kept so l_avg * (n_sw + 1) == T stays checkable
};

/// Evaluates an EDL against scores, the cut-suitability matrix and config.
/// Throws when the EDL does not cover the scores' timeline.
MetricsReport compute_metrics(const EditDecisionList& edl, const ScoreMatrix& scores,
                              const TransitionMatrix& t_mat, const EditConfig& cfg,
                              const std::string& method = "");

/// One row of a method-comparison table; aggregate rows may carry fractional
/// cut counts.
struct ComparisonRow {
    std::string method;
    double r_avg = 0.0;
    double r_max = 0.0;
    double r_trans = 0.0;
    double n_sw = 0.0;
    double l_avg = 0.0;
    std::string status;  // empty = ok

    static ComparisonRow from_report(const MetricsReport& r);
};

/// Aligned text table; the best R_avg, r_max and r_trans cells are marked
/// with '*'.
std::string render_comparison_text(std::span<const ComparisonRow> rows);

/// CSV with a trailing `best` column naming the metrics each row wins.
std::string render_comparison_csv(std::span<const ComparisonRow> rows);

/// Camera-per-time selection timeline as a standalone SVG document.
std::string render_timeline_svg(const EditDecisionList& edl,
                                std::span<const std::string> camera_ids, int T);

}  // namespace lecedit

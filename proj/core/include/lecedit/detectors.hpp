// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lecedit/scenario.hpp"

namespace lecedit {

/// Tunables of the signal-level event detectors.
struct DetectorParams {
    int ar_window = 50;          // autoregression history length (>= 4)
    double ar_threshold = 4.0;   // residual multiplier k_sigma (> 0)
    double sigma_floor = 1e-6;   // lower bound on the residual deviation
    int entropy_bins = 9;        // orientation histogram bins (>= 2)
    int drop_window = 25;        // score-window length w (>= 1)
    // Drop threshold delta; unset means 0.5 * std of the score series.
    std::optional<double> drop_threshold;
    int count_min = 1;           // person-count trigger: count > count_min
    double position_low = 0.2;   // normal stage band, normalized coordinates
    double position_high = 0.8;
    double prob_threshold = 0.5; // external event-probability cutoff
};

/// Mean over channels of || |grad a_ch| - |grad b_ch| ||_2, where the
/// gradient uses central differences with replicated borders. Zero iff the
/// per-pixel gradient magnitudes agree, so it ignores constant offsets.
double grad_diff_score(const FrameGrid& a, const FrameGrid& b);

/// Per-instance change scores of a frame stream; entry 0 is 0.
std::vector<double> grad_diff_series(std::span<const FrameGrid> frames);

/// Order-2 least-squares autoregression over a sliding window: instance t
/// is flagged when the prediction residual exceeds ar_threshold times the
/// in-window residual deviation. Instances before the first full window
/// are never flagged.
std::vector<int> ar_anomaly_detect(std::span<const double> series, const DetectorParams& p);

/// Sum of the Shannon entropies of the softmax-normalized orientation
/// histograms of the u and v channels (gradient-magnitude weighted, unsigned
/// orientation, one global cell). Range (0, 2*ln bins]; maximal for any flow
/// whose raw histograms are constant, in particular zero flow.
double motion_entropy_score(const FlowField& flow, int bins);

std::vector<double> motion_entropy_series(std::span<const FlowField> flows, int bins);

/// Flags t when the mean of the scores in [t-2w, t-w) exceeds the mean over
/// [t-w, t] by more than delta: drops only, never rises.
std::vector<int> window_drop_detect(std::span<const double> scores, const DetectorParams& p);

/// 1 where count > count_min.
std::vector<int> count_indicator(std::span<const int> counts, const DetectorParams& p);

/// 1 where the position leaves the [low, high] band (strict comparisons).
std::vector<int> position_indicator(std::span<const double> positions, const DetectorParams& p);

/// 1 where the externally supplied probability exceeds prob_threshold.
/// Throws on values outside [0, 1].
std::vector<int> prob_indicator(std::span<const double> probs, const DetectorParams& p);

/// Reruns the detector matching each camera's shot kind on whatever feature
/// streams are present and overwrites that camera's indicator. Cameras
/// without features are left untouched. Returns the number of refreshed
/// indicators.
int refresh_indicators(Scenario& s, const DetectorParams& p);

}  // namespace lecedit

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "lecedit/edit_config.hpp"
#include "lecedit/scenario.hpp"

namespace lecedit {

/// Per-camera, per-instance semantic focus scores plus the camera identity
/// needed to interpret them (ids and shot kinds share the row order).
struct ScoreMatrix {
    std::vector<std::string> camera_ids;
    std::vector<ShotKind> kinds;
    std::vector<std::vector<double>> values;  // [camera][t]

    int camera_count() const { return static_cast<int>(values.size()); }
    int horizon() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
    double at(int camera, int t) const { return values[camera][t]; }
};

/// 7x7 cut-suitability matrix over shot kinds: +epsilon for acceptable cuts,
/// -epsilon for rule-breaking ones; the diagonal (no cut) is always +epsilon.
struct TransitionMatrix {
    double epsilon = 1.0;
    std::array<std::array<double, kShotKindCount>, kShotKindCount> m{};

    double at(ShotKind from, ShotKind to) const { return m[index_of(from)][index_of(to)]; }
};

/// r[c][t] = default(kind) + indicator[c][t] * weight(kind).
ScoreMatrix semantic_scores(const Scenario& s, const EditConfig& cfg);

/// Builds the suitability matrix from the config's violation sets.
TransitionMatrix build_transition_matrix(const EditConfig& cfg);

/// Soft shot-length penalty, always in (-c_sw, 0): staying is punished as the
/// run grows past l_max, switching as it cuts before l_min.
double switch_penalty(double run_length, bool switched, const EditConfig& cfg);

/// c_broll when the previous shot already ran longer than l_mean / 2 and the
/// target is an insert shot (B-roll set); otherwise 0.
double broll_incentive(double run_length, ShotKind target, const EditConfig& cfg);

/// The per-step objective: lambda_e * T[kind(prev), kind(next)] * r[next][t]
/// + lambda_b * broll_incentive + lambda_sw * switch_penalty, where the run
/// length is the length of the shot ending at t-1.
double step_reward(int prev_camera, int next_camera, int t, int run_length,
                   const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                   const EditConfig& cfg);

}  // namespace lecedit

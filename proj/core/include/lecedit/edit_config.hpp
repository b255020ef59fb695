// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "lecedit/shot_kind.hpp"

namespace lecedit {

/// Number of future instances the optimizer may look at. `infinite` means
/// the whole remaining timeline (offline editing).
struct LookAhead {
    int value = 0;
    bool infinite = true;

    static LookAhead inf() { return LookAhead{0, true}; }
    static LookAhead of(int l) { return LookAhead{l, false}; }
    bool operator==(const LookAhead&) const = default;
};

/// State assumed to exist just before the first edited instance. An empty
/// camera id selects the policy default: the camera with the highest
/// semantic score at t = 0 (ties toward the lowest index).
struct InitialCamera {
    std::string camera_id;
    int run_length = 1;
};

/// All knobs of the editing objective: per-shot score weights and defaults,
/// transition suitability, switch penalty, B-roll incentive and the reward
/// mixing weights.
struct EditConfig {
    std::array<double, kShotKindCount> weights{};
    std::array<double, kShotKindCount> defaults{};

    double epsilon = 1.0;   // transition suitability magnitude (> 0)
    double c_sw = 1.0;      // switch-penalty scale (>= 0)
    double c_broll = 1.0;   // B-roll incentive (>= 0)
    double l_min = 20.0;    // expected minimum segment length (instances)
    double l_max = 60.0;    // expected maximum segment length (instances)
    double l_mean = 40.0;   // B-roll trigger base; default (l_min + l_max) / 2

    std::array<bool, kShotKindCount> broll_set{};
    // violations[from][to]: cutting from -> to breaks a transition rule.
    std::array<std::array<bool, kShotKindCount>, kShotKindCount> violations{};

    double lambda_e = 0.3;
    double lambda_sw = 0.4;
    double lambda_b = 0.3;

    LookAhead look_ahead = LookAhead::inf();
    InitialCamera initial;
    std::string tie_break = "lowest_index";

    double weight(ShotKind k) const { return weights[index_of(k)]; }
    double default_score(ShotKind k) const { return defaults[index_of(k)]; }
    bool in_broll_set(ShotKind k) const { return broll_set[index_of(k)]; }
    bool violates(ShotKind from, ShotKind to) const {
        return violations[index_of(from)][index_of(to)];
    }
};

/// The stock configuration: weights/defaults 0.8/0.8/1/0.4/0.6/0.6/0.2 for
/// rb, lb, sc, sl, lm, rm, ol; L in [20, 60]; lambdas {sw, e, b} =
/// {0.4, 0.3, 0.3}; B-roll set {sl, ol, sc}; transition rules forbidding
/// blackboard-to-blackboard cuts and direct close-up <-> student-long cuts.
EditConfig default_config();

/// Returns human-readable breaches of the config invariants; empty if valid.
std::vector<std::string> validate_config(const EditConfig& cfg);

}  // namespace lecedit

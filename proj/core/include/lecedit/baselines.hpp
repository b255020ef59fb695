// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lecedit/edl.hpp"
#include "lecedit/scoring.hpp"

namespace lecedit {

/// One event-driven transition: when the trigger camera's indicator is 1,
/// jump to the target camera's state.
struct FsmRule {
    std::string trigger_camera;
    std::string target_camera;
};

/// Data-driven state machine over cameras. Rules are checked in listed
/// order; when none fires and the dwell exceeds the state's bound, the
/// default transition is taken (states without one simply hold).
struct FsmSpec {
    std::string initial_camera;
    std::vector<FsmRule> rules;
    std::map<std::string, int> max_dwell;
    std::map<std::string, std::string> default_next;
};

struct BaselineParams {
    int randseg_n = 30;
    double ranking_mean = 40.0;
    double ranking_std = 10.0;
    FsmSpec fsm_spec;
    std::uint64_t rng_seed = 1;
};

/// Fixed-length segmentation with a uniformly drawn camera per segment;
/// consecutive equal draws merge in the EDL.
EditDecisionList randseg(const Scenario& s, const BaselineParams& p);

/// Holds the current camera for a Normal(mean, std) duration (rounded,
/// clamped to [1, T]) and then greedily jumps to the highest-scoring camera;
/// if the argmax is the current camera the shot simply extends.
EditDecisionList ranking(const Scenario& s, const ScoreMatrix& scores,
                         const BaselineParams& p);

/// Executes the state machine instance by instance.
EditDecisionList fsm(const Scenario& s, const BaselineParams& p);

/// Stock machine for a scenario: states are the cameras, each camera's own
/// indicator pulls the machine to it (priority = camera order), dwell bound
/// l_max everywhere, default transitions cycle through the cameras.
FsmSpec default_fsm_spec(const Scenario& s, const EditConfig& cfg);

}  // namespace lecedit

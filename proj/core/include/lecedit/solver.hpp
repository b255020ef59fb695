// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "lecedit/scoring.hpp"

namespace lecedit {

enum class SolveMode { paper_dp, exact_dp, brute_force };

std::string_view to_string(SolveMode m);

/// Camera and run length in effect just before the first solved instance.
struct InitState {
    int camera = 0;
    int run_length = 1;
};

struct SolveResult {
    std::vector<int> sequence;  // camera index per instance
    double total_reward = 0.0;  // always equals rescore(sequence)
    SolveMode mode = SolveMode::paper_dp;
    long long update_count = 0; // predecessor relaxations performed
};

/// Resolves the configured initial-camera policy against a score matrix:
/// an explicit camera id, or the argmax of the scores at t = 0 (ties toward
/// the lowest index).
InitState initial_state(const ScoreMatrix& scores, const EditConfig& cfg);

/// Re-evaluates the exact objective of a fixed sequence covering
/// [t_start, t_start + sequence.size()), walking true run lengths from the
/// init state. The single source of truth for comparing solvers and
/// baselines.
double rescore(std::span<const int> sequence, const ScoreMatrix& scores,
               const TransitionMatrix& t_mat, const EditConfig& cfg, InitState init,
               int t_start = 0);

/// Forward pass over the frame graph keeping one (reward, predecessor,
/// run-length) triple per camera and instance, then backtracking from the
/// best final node. Work is Theta(C^2 * horizon). Fast, but the single
/// run-length slot per node can be suboptimal for run-length-dependent
/// rewards; see solve_exact_dp.
SolveResult solve_paper_dp(const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                           const EditConfig& cfg, InitState init, int t_start, int horizon);

/// Expanded-state dynamic program over (camera, run length capped at l_cap).
/// Exact for the stated objective whenever l_cap sits past the saturation
/// point of the length-dependent terms; l_cap <= 0 selects l_max + 40.
/// Work is Theta(C^2 * l_cap * horizon).
SolveResult solve_exact_dp(const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                           const EditConfig& cfg, InitState init, int t_start, int horizon,
                           int l_cap = 0);

/// Exhaustive enumeration of all C^horizon sequences, each re-scored with the
/// exact objective. Guarded to C^horizon <= 1e7; ties resolve to the
/// lexicographically smallest sequence.
SolveResult brute_force(const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                        const EditConfig& cfg, InitState init, int t_start, int horizon);

struct OnlineOptions {
    LookAhead look_ahead = LookAhead::inf();
    SolveMode solver = SolveMode::exact_dp;
    int l_cap = 0;  // forwarded to solve_exact_dp
};

/// Chunked driver: repeatedly solves the next min(l, remaining) instances
/// from the carried (camera, run length) state and commits whole chunks.
/// An infinite look-ahead (or l >= T) degenerates to one offline solve.
SolveResult run_online(const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                       const EditConfig& cfg, InitState init, const OnlineOptions& opts);

}  // namespace lecedit

// SPDX-License-Identifier: Apache-2.0
#include "lecedit/scoring.hpp"

#include <cmath>

namespace lecedit {
namespace {

// 1 / (1 + e^(-x)), overflow-free on both tails. Kept cancellation-free so
// that 1/(1+e^x) - 1 == -sigmoid(x) stays a true negative instead of
// rounding to zero when e^x underflows against the 1.
double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

}  // namespace

ScoreMatrix semantic_scores(const Scenario& s, const EditConfig& cfg) {
    ScoreMatrix m;
    m.camera_ids.reserve(s.cameras.size());
    m.kinds.reserve(s.cameras.size());
    m.values.reserve(s.cameras.size());
    for (const Camera& cam : s.cameras) {
        m.camera_ids.push_back(cam.id);
        m.kinds.push_back(cam.kind);
        std::vector<double> row(static_cast<std::size_t>(s.T), 0.0);
        const double base = cfg.default_score(cam.kind);
        const double w = cfg.weight(cam.kind);
        for (int t = 0; t < s.T; ++t) row[t] = base + cam.indicator[t] * w;
        m.values.push_back(std::move(row));
    }
    return m;
}

TransitionMatrix build_transition_matrix(const EditConfig& cfg) {
    TransitionMatrix t;
    t.epsilon = cfg.epsilon;
    for (ShotKind from : all_shot_kinds)
        for (ShotKind to : all_shot_kinds)
            t.m[index_of(from)][index_of(to)] =
                (from != to && cfg.violates(from, to)) ? -cfg.epsilon : cfg.epsilon;
    return t;
}

double switch_penalty(double run_length, bool switched, const EditConfig& cfg) {
    // 1/(1+e^x) - 1 == -sigmoid(x)
    const double x = switched ? cfg.l_min - run_length : run_length - cfg.l_max;
    return -cfg.c_sw * sigmoid(x);
}

double broll_incentive(double run_length, ShotKind target, const EditConfig& cfg) {
    return (run_length > cfg.l_mean / 2.0 && cfg.in_broll_set(target)) ? cfg.c_broll : 0.0;
}

double step_reward(int prev_camera, int next_camera, int t, int run_length,
                   const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                   const EditConfig& cfg) {
    const ShotKind from = scores.kinds[prev_camera];
    const ShotKind to = scores.kinds[next_camera];
    const bool switched = prev_camera != next_camera;
    return cfg.lambda_e * t_mat.at(from, to) * scores.at(next_camera, t) +
           cfg.lambda_b * broll_incentive(run_length, to, cfg) +
           cfg.lambda_sw * switch_penalty(run_length, switched, cfg);
}

}  // namespace lecedit

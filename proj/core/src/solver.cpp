// SPDX-License-Identifier: Apache-2.0
#include "lecedit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lecedit {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_instance(const ScoreMatrix& scores, InitState init, int t_start, int horizon) {
    const int C = scores.camera_count();
    if (C < 1) throw std::invalid_argument("solver: score matrix has no cameras");
    if (horizon < 1) throw std::invalid_argument("solver: horizon must be >= 1");
    if (t_start < 0 || t_start + horizon > scores.horizon())
        throw std::invalid_argument("solver: window [" + std::to_string(t_start) + ", " +
                                    std::to_string(t_start + horizon) +
                                    ") outside scores horizon " +
                                    std::to_string(scores.horizon()));
    if (init.camera < 0 || init.camera >= C)
        throw std::invalid_argument("solver: init camera index out of range");
    if (init.run_length < 1) throw std::invalid_argument("solver: init run length must be >= 1");
}

int default_l_cap(const EditConfig& cfg) { return static_cast<int>(std::ceil(cfg.l_max)) + 40; }

}  // namespace

std::string_view to_string(SolveMode m) {
    switch (m) {
        case SolveMode::paper_dp: return "paper_dp";
        case SolveMode::exact_dp: return "exact_dp";
        case SolveMode::brute_force: return "brute_force";
    }
    return "?";
}

InitState initial_state(const ScoreMatrix& scores, const EditConfig& cfg) {
    InitState init;
    init.run_length = cfg.initial.run_length;
    if (cfg.initial.camera_id.empty()) {
        if (scores.camera_count() < 1 || scores.horizon() < 1)
            throw std::invalid_argument("initial_state: empty score matrix");
        int best = 0;
        for (int c = 1; c < scores.camera_count(); ++c)
            if (scores.at(c, 0) > scores.at(best, 0)) best = c;
        init.camera = best;
    } else {
        const auto it = std::find(scores.camera_ids.begin(), scores.camera_ids.end(),
                                  cfg.initial.camera_id);
        if (it == scores.camera_ids.end())
            throw std::invalid_argument("initial_state: unknown camera '" +
                                        cfg.initial.camera_id + "'");
        init.camera = static_cast<int>(it - scores.camera_ids.begin());
    }
    return init;
}

double rescore(std::span<const int> sequence, const ScoreMatrix& scores,
               const TransitionMatrix& t_mat, const EditConfig& cfg, InitState init,
               int t_start) {
    check_instance(scores, init, t_start, static_cast<int>(sequence.size()));
    double total = 0.0;
    int prev = init.camera;
    int run = init.run_length;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const int c = sequence[i];
        if (c < 0 || c >= scores.camera_count())
            throw std::invalid_argument("rescore: camera index out of range at step " +
                                        std::to_string(i));
        total += step_reward(prev, c, t_start + static_cast<int>(i), run, scores, t_mat, cfg);
        run = (c == prev) ? run + 1 : 1;
        prev = c;
    }
    return total;
}

SolveResult solve_paper_dp(const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                           const EditConfig& cfg, InitState init, int t_start, int horizon) {
    check_instance(scores, init, t_start, horizon);
    const int C = scores.camera_count();

    std::vector<double> reward_prev(C), reward_cur(C);
    std::vector<int> run_prev(C), run_cur(C);
    std::vector<std::vector<int>> pred(horizon, std::vector<int>(C, -1));
    long long updates = 0;

    // First layer: the only possible predecessor is the carried state.
    for (int c = 0; c < C; ++c) {
        reward_prev[c] = step_reward(init.camera, c, t_start, init.run_length, scores, t_mat, cfg);
        run_prev[c] = (c == init.camera) ? init.run_length + 1 : 1;
        ++updates;
    }

    for (int i = 1; i < horizon; ++i) {
        const int t = t_start + i;
        for (int c = 0; c < C; ++c) {
            double best = kNegInf;
            int best_k = -1;
            for (int k = 0; k < C; ++k) {
                const double cand =
                    reward_prev[k] + step_reward(k, c, t, run_prev[k], scores, t_mat, cfg);
                ++updates;
                if (cand > best) {  // strict: ties keep the lowest camera index
                    best = cand;
                    best_k = k;
                }
            }
            reward_cur[c] = best;
            pred[i][c] = best_k;
            run_cur[c] = (best_k == c) ? run_prev[best_k] + 1 : 1;
        }
        reward_prev.swap(reward_cur);
        run_prev.swap(run_cur);
    }

    int last = 0;
    for (int c = 1; c < C; ++c)
        if (reward_prev[c] > reward_prev[last]) last = c;

    std::vector<int> seq(static_cast<std::size_t>(horizon));
    for (int i = horizon - 1; i >= 0; --i) {
        seq[i] = last;
        last = pred[i][last];
    }

    SolveResult res;
    res.sequence = std::move(seq);
    res.mode = SolveMode::paper_dp;
    res.update_count = updates;
    res.total_reward = rescore(res.sequence, scores, t_mat, cfg, init, t_start);
    return res;
}

SolveResult solve_exact_dp(const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                           const EditConfig& cfg, InitState init, int t_start, int horizon,
                           int l_cap) {
    check_instance(scores, init, t_start, horizon);
    if (l_cap <= 0) l_cap = default_l_cap(cfg);

    // The cap is only valid once every run-length-dependent term has
    // saturated: |1/(1+e^x)| < 1e-9 needs x > ln(1e9) ~ 20.8, and the B-roll
    // trigger must already be passed at the cap.
    const double margin = 21.0;
    if (l_cap < cfg.l_max + margin || l_cap < cfg.l_min + margin || l_cap <= cfg.l_mean / 2.0)
        throw std::invalid_argument("solve_exact_dp: l_cap " + std::to_string(l_cap) +
                                    " below the saturation margin of the length terms");

    const int C = scores.camera_count();
    const int cap = l_cap;
    const int n_states = C * cap;
    const auto state_of = [cap](int camera, int run) { return camera * cap + (run - 1); };

    std::vector<double> reward_prev(n_states, kNegInf), reward_cur(n_states, kNegInf);
    std::vector<std::vector<int>> pred(horizon, std::vector<int>(n_states, -1));
    long long updates = 0;

    reward_prev[state_of(init.camera, std::min(init.run_length, cap))] = 0.0;

    for (int i = 0; i < horizon; ++i) {
        const int t = t_start + i;
        std::fill(reward_cur.begin(), reward_cur.end(), kNegInf);
        for (int k = 0; k < C; ++k) {
            for (int run = 1; run <= cap; ++run) {
                const int src = state_of(k, run);
                const double base = reward_prev[src];
                if (base == kNegInf) continue;
                for (int c = 0; c < C; ++c) {
                    const double cand =
                        base + step_reward(k, c, t, run, scores, t_mat, cfg);
                    ++updates;
                    const int dst =
                        (c == k) ? state_of(c, std::min(run + 1, cap)) : state_of(c, 1);
                    if (cand > reward_cur[dst]) {
                        reward_cur[dst] = cand;
                        pred[i][dst] = src;
                    }
                }
            }
        }
        reward_prev.swap(reward_cur);
    }

    // Final ties resolve to the lowest camera and, within it, the longest
    // run, so reward-equal alternatives collapse onto the stay path.
    int last = -1;
    double best = kNegInf;
    for (int c = 0; c < C; ++c)
        for (int run = cap; run >= 1; --run) {
            const int s = state_of(c, run);
            if (reward_prev[s] > best) {
                best = reward_prev[s];
                last = s;
            }
        }

    std::vector<int> seq(static_cast<std::size_t>(horizon));
    for (int i = horizon - 1; i >= 0; --i) {
        seq[i] = last / cap;
        last = pred[i][last];
    }

    SolveResult res;
    res.sequence = std::move(seq);
    res.mode = SolveMode::exact_dp;
    res.update_count = updates;
    res.total_reward = rescore(res.sequence, scores, t_mat, cfg, init, t_start);
    return res;
}

SolveResult brute_force(const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                        const EditConfig& cfg, InitState init, int t_start, int horizon) {
    check_instance(scores, init, t_start, horizon);
    const int C = scores.camera_count();

    double combos = 1.0;
    for (int i = 0; i < horizon; ++i) combos *= C;
    if (combos > 1e7)
        throw std::invalid_argument("brute_force: C^horizon = " + std::to_string(combos) +
                                    " exceeds the 1e7 guard");

    std::vector<int> seq(static_cast<std::size_t>(horizon), 0);
    SolveResult res;
    res.mode = SolveMode::brute_force;
    res.total_reward = kNegInf;

    // The odometer enumerates sequences in lexicographic order, so keeping
    // strictly better candidates leaves the lexicographically smallest
    // optimum in place.
    while (true) {
        const double r = rescore(seq, scores, t_mat, cfg, init, t_start);
        ++res.update_count;
        if (r > res.total_reward) {
            res.total_reward = r;
            res.sequence = seq;
        }
        int pos = horizon - 1;
        while (pos >= 0 && seq[pos] == C - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return res;
}

SolveResult run_online(const ScoreMatrix& scores, const TransitionMatrix& t_mat,
                       const EditConfig& cfg, InitState init, const OnlineOptions& opts) {
    const int T = scores.horizon();
    check_instance(scores, init, 0, T);
    if (!opts.look_ahead.infinite && opts.look_ahead.value < 1)
        throw std::invalid_argument("run_online: look-ahead must be >= 1 or infinite");

    SolveResult out;
    out.sequence.reserve(static_cast<std::size_t>(T));

    InitState state = init;
    int t = 0;
    while (t < T) {
        const int remaining = T - t;
        const int chunk =
            opts.look_ahead.infinite ? remaining : std::min(opts.look_ahead.value, remaining);

        SolveResult sub;
        switch (opts.solver) {
            case SolveMode::paper_dp:
                sub = solve_paper_dp(scores, t_mat, cfg, state, t, chunk);
                break;
            case SolveMode::exact_dp:
                sub = solve_exact_dp(scores, t_mat, cfg, state, t, chunk, opts.l_cap);
                break;
            case SolveMode::brute_force:
                sub = brute_force(scores, t_mat, cfg, state, t, chunk);
                break;
        }
        out.update_count += sub.update_count;
        out.mode = sub.mode;

        for (int c : sub.sequence) {
            state.run_length = (c == state.camera) ? state.run_length + 1 : 1;
            state.camera = c;
            out.sequence.push_back(c);
        }
        t += chunk;
    }

    out.total_reward = rescore(out.sequence, scores, t_mat, cfg, init, 0);
    return out;
}

}  // namespace lecedit

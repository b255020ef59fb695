// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lecedit/solver.hpp"
#include "test_util.hpp"

using namespace lecedit;
using test::kTestLCap;

TEST_CASE("one camera: the only path, rewarded as a chain of stays") {
    Rng rng(31);
    const ScoreMatrix m = test::random_scores(rng, 1, 6);
    const EditConfig cfg = test::random_config(rng);
    const TransitionMatrix t = build_transition_matrix(cfg);
    const InitState init{0, 2};

    const SolveResult res = solve_paper_dp(m, t, cfg, init, 0, 6);
    CHECK(res.sequence == std::vector<int>(6, 0));

    double expected = 0.0;
    int run = init.run_length;
    for (int i = 0; i < 6; ++i) {
        expected += step_reward(0, 0, i, run, m, t, cfg);
        ++run;
    }
    CHECK(res.total_reward == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("separable objective: solution is the per-instance argmax") {
    Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const int C = uniform_int(rng, 2, 5), T = uniform_int(rng, 3, 12);
        const ScoreMatrix m = test::random_scores(rng, C, T);
        EditConfig cfg = test::random_config(rng, /*with_violations=*/false);
        cfg.lambda_sw = cfg.lambda_b = 0.0;
        const TransitionMatrix t = build_transition_matrix(cfg);
        const InitState init = test::random_init(rng, C);

        const SolveResult res = solve_paper_dp(m, t, cfg, init, 0, T);
        for (int i = 0; i < T; ++i) {
            int best = 0;
            for (int c = 1; c < C; ++c)
                if (m.at(c, i) > m.at(best, i)) best = c;
            CHECK(res.sequence[i] == best);
        }
    }
}

TEST_CASE("exact DP matches brute force and dominates the paper DP") {
    Rng rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        const int C = uniform_int(rng, 1, 3), T = uniform_int(rng, 1, 8);
        const ScoreMatrix m = test::random_scores(rng, C, T);
        const EditConfig cfg = test::random_config(rng);
        const TransitionMatrix t = build_transition_matrix(cfg);
        const InitState init = test::random_init(rng, C);

        const SolveResult bf = brute_force(m, t, cfg, init, 0, T);
        const SolveResult ex = solve_exact_dp(m, t, cfg, init, 0, T, kTestLCap);
        const SolveResult pa = solve_paper_dp(m, t, cfg, init, 0, T);

        const double r_bf = rescore(bf.sequence, m, t, cfg, init);
        const double r_ex = rescore(ex.sequence, m, t, cfg, init);
        const double r_pa = rescore(pa.sequence, m, t, cfg, init);
        CHECK(r_ex == r_bf);  // exact equality of doubles
        CHECK(r_pa <= r_ex);

        CHECK(bf.total_reward == r_bf);
        CHECK(ex.total_reward == r_ex);
        CHECK(pa.total_reward == r_pa);
    }
}

TEST_CASE("with lambda_sw = lambda_b = 0 all three solvers agree even with violations") {
    Rng rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const int C = uniform_int(rng, 1, 3), T = uniform_int(rng, 1, 8);
        const ScoreMatrix m = test::random_scores(rng, C, T);
        EditConfig cfg = test::random_config(rng);
        cfg.lambda_sw = cfg.lambda_b = 0.0;
        const TransitionMatrix t = build_transition_matrix(cfg);
        const InitState init = test::random_init(rng, C);

        const double r_bf = brute_force(m, t, cfg, init, 0, T).total_reward;
        const double r_ex = solve_exact_dp(m, t, cfg, init, 0, T, kTestLCap).total_reward;
        const double r_pa = solve_paper_dp(m, t, cfg, init, 0, T).total_reward;
        CHECK(r_bf == r_ex);
        CHECK(r_pa == r_ex);
    }
}

TEST_CASE("deterministic tie-breaking toward low camera indices") {
    ScoreMatrix m;
    m.camera_ids = {"a", "b", "c"};
    m.kinds = {ShotKind::LeftMedium, ShotKind::RightMedium, ShotKind::OverviewLong};
    m.values = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}};
    EditConfig cfg = default_config();
    cfg.lambda_sw = cfg.lambda_b = 0.0;
    for (auto& row : cfg.violations) row.fill(false);
    const TransitionMatrix t = build_transition_matrix(cfg);
    const InitState init{1, 1};

    for (auto solver : {SolveMode::paper_dp, SolveMode::exact_dp, SolveMode::brute_force}) {
        SolveResult res;
        switch (solver) {
            case SolveMode::paper_dp: res = solve_paper_dp(m, t, cfg, init, 0, 4); break;
            case SolveMode::exact_dp: res = solve_exact_dp(m, t, cfg, init, 0, 4); break;
            case SolveMode::brute_force: res = brute_force(m, t, cfg, init, 0, 4); break;
        }
        CHECK(res.sequence == std::vector<int>{0, 0, 0, 0});
    }
}

TEST_CASE("solvers are deterministic across runs") {
    Rng rng(35);
    const ScoreMatrix m = test::random_scores(rng, 3, 7);
    const EditConfig cfg = test::random_config(rng);
    const TransitionMatrix t = build_transition_matrix(cfg);
    const InitState init{2, 3};

    const SolveResult a = solve_exact_dp(m, t, cfg, init, 0, 7, kTestLCap);
    const SolveResult b = solve_exact_dp(m, t, cfg, init, 0, 7, kTestLCap);
    CHECK(a.sequence == b.sequence);
    CHECK(a.total_reward == b.total_reward);

    const SolveResult c = solve_paper_dp(m, t, cfg, init, 0, 7);
    const SolveResult d = solve_paper_dp(m, t, cfg, init, 0, 7);
    CHECK(c.sequence == d.sequence);
}

TEST_CASE("rescore: frozen three-stay sum with switch penalty only") {
    ScoreMatrix m;
    m.camera_ids = {"only"};
    m.kinds = {ShotKind::LeftMedium};
    m.values = {{0.0, 0.0, 0.0}};
    EditConfig cfg = default_config();
    cfg.lambda_e = cfg.lambda_b = 0.0;
    cfg.lambda_sw = 1.0;
    cfg.c_sw = 1.0;
    cfg.l_min = 1.0;
    cfg.l_max = 3.0;
    cfg.l_mean = 2.0;
    const TransitionMatrix t = build_transition_matrix(cfg);

    const std::vector<int> seq = {0, 0, 0};
    const double total = rescore(seq, m, t, cfg, InitState{0, 1});
    CHECK(total == doctest::Approx(-0.8881443433921128).epsilon(1e-12));
}

TEST_CASE("rescore: all-zero lambdas give zero for any sequence") {
    Rng rng(36);
    const ScoreMatrix m = test::random_scores(rng, 3, 6);
    EditConfig cfg = test::random_config(rng);
    cfg.lambda_e = cfg.lambda_sw = cfg.lambda_b = 0.0;
    const TransitionMatrix t = build_transition_matrix(cfg);
    const std::vector<int> seq = {0, 1, 2, 1, 0, 2};
    CHECK(rescore(seq, m, t, cfg, InitState{0, 1}) == 0.0);
}

TEST_CASE("rescore rejects malformed calls") {
    Rng rng(37);
    const ScoreMatrix m = test::random_scores(rng, 2, 4);
    const EditConfig cfg = test::random_config(rng);
    const TransitionMatrix t = build_transition_matrix(cfg);

    const std::vector<int> too_long(5, 0);
    CHECK_THROWS_AS(rescore(too_long, m, t, cfg, InitState{0, 1}), std::invalid_argument);
    const std::vector<int> bad_cam = {0, 3, 0, 0};
    CHECK_THROWS_AS(rescore(bad_cam, m, t, cfg, InitState{0, 1}), std::invalid_argument);
    const std::vector<int> ok = {0, 1, 0, 1};
    CHECK_THROWS_AS(rescore(ok, m, t, cfg, InitState{5, 1}), std::invalid_argument);
}

TEST_CASE("solver guards: empty horizon, brute-force explosion, bad l_cap") {
    Rng rng(38);
    const ScoreMatrix m = test::random_scores(rng, 2, 10);
    const EditConfig cfg = test::random_config(rng);
    const TransitionMatrix t = build_transition_matrix(cfg);
    const InitState init{0, 1};

    CHECK_THROWS_AS(solve_paper_dp(m, t, cfg, init, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(solve_exact_dp(m, t, cfg, init, 0, 5, 3), std::invalid_argument);

    const ScoreMatrix wide = test::random_scores(rng, 12, 8);
    CHECK_THROWS_AS(brute_force(wide, t, cfg, InitState{0, 1}, 0, 8), std::invalid_argument);
}

TEST_CASE("initial_state resolves the argmax policy with low-index ties") {
    ScoreMatrix m;
    m.camera_ids = {"a", "b", "c"};
    m.kinds = {ShotKind::LeftMedium, ShotKind::RightMedium, ShotKind::OverviewLong};
    m.values = {{2.0, 0.0}, {5.0, 0.0}, {5.0, 0.0}};
    EditConfig cfg = default_config();
    CHECK(initial_state(m, cfg).camera == 1);  // ties toward the lower index
    CHECK(initial_state(m, cfg).run_length == 1);

    cfg.initial.camera_id = "c";
    cfg.initial.run_length = 9;
    CHECK(initial_state(m, cfg).camera == 2);
    CHECK(initial_state(m, cfg).run_length == 9);

    cfg.initial.camera_id = "nope";
    CHECK_THROWS_AS(initial_state(m, cfg), std::invalid_argument);
}

TEST_CASE("run_online: full look-ahead equals the offline solve") {
    Rng rng(39);
    for (int trial = 0; trial < 10; ++trial) {
        const int C = uniform_int(rng, 2, 3), T = uniform_int(rng, 4, 10);
        const ScoreMatrix m = test::random_scores(rng, C, T);
        const EditConfig cfg = test::random_config(rng);
        const TransitionMatrix t = build_transition_matrix(cfg);
        const InitState init = test::random_init(rng, C);

        OnlineOptions opts;
        opts.solver = SolveMode::exact_dp;
        opts.l_cap = kTestLCap;

        opts.look_ahead = LookAhead::inf();
        const SolveResult offline = run_online(m, t, cfg, init, opts);
        const SolveResult direct = solve_exact_dp(m, t, cfg, init, 0, T, kTestLCap);
        CHECK(offline.sequence == direct.sequence);
        CHECK(offline.total_reward == direct.total_reward);

        opts.look_ahead = LookAhead::of(T + 5);
        CHECK(run_online(m, t, cfg, init, opts).sequence == direct.sequence);
    }
}

TEST_CASE("run_online with l = 1 is the greedy per-step argmax") {
    Rng rng(40);
    for (int trial = 0; trial < 10; ++trial) {
        const int C = uniform_int(rng, 2, 4), T = uniform_int(rng, 3, 9);
        const ScoreMatrix m = test::random_scores(rng, C, T);
        const EditConfig cfg = test::random_config(rng);
        const TransitionMatrix t = build_transition_matrix(cfg);
        const InitState init = test::random_init(rng, C);

        OnlineOptions opts;
        opts.solver = SolveMode::exact_dp;
        opts.l_cap = kTestLCap;
        opts.look_ahead = LookAhead::of(1);
        const SolveResult res = run_online(m, t, cfg, init, opts);

        InitState state = init;
        for (int i = 0; i < T; ++i) {
            int best = 0;
            double best_v = step_reward(state.camera, 0, i, state.run_length, m, t, cfg);
            for (int c = 1; c < C; ++c) {
                const double v = step_reward(state.camera, c, i, state.run_length, m, t, cfg);
                if (v > best_v) {
                    best_v = v;
                    best = c;
                }
            }
            CHECK(res.sequence[i] == best);
            state.run_length = (best == state.camera) ? state.run_length + 1 : 1;
            state.camera = best;
        }
    }
}

TEST_CASE("chunk boundaries introduce no reward gaps") {
    // the committed total must equal the sum of the chunk solves' own
    // totals: the first instance of each chunk pays its terms against the
    // carried state, nothing is dropped or double counted
    Rng rng(46);
    for (int trial = 0; trial < 15; ++trial) {
        const int C = uniform_int(rng, 2, 3), T = uniform_int(rng, 6, 12);
        const ScoreMatrix m = test::random_scores(rng, C, T);
        const EditConfig cfg = test::random_config(rng);
        const TransitionMatrix t = build_transition_matrix(cfg);
        const InitState init = test::random_init(rng, C);
        const int l = uniform_int(rng, 1, 4);

        double chunk_sum = 0.0;
        InitState state = init;
        int pos = 0;
        while (pos < T) {
            const int chunk = std::min(l, T - pos);
            const SolveResult sub = solve_exact_dp(m, t, cfg, state, pos, chunk, kTestLCap);
            chunk_sum += sub.total_reward;
            for (int c : sub.sequence) {
                state.run_length = (c == state.camera) ? state.run_length + 1 : 1;
                state.camera = c;
            }
            pos += chunk;
        }

        OnlineOptions opts;
        opts.solver = SolveMode::exact_dp;
        opts.l_cap = kTestLCap;
        opts.look_ahead = LookAhead::of(l);
        const SolveResult online = run_online(m, t, cfg, init, opts);
        CHECK(online.total_reward == doctest::Approx(chunk_sum).epsilon(1e-12));
    }
}

TEST_CASE("finite look-ahead never beats the offline exact solve") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int C = uniform_int(rng, 2, 3), T = uniform_int(rng, 4, 10);
        const ScoreMatrix m = test::random_scores(rng, C, T);
        const EditConfig cfg = test::random_config(rng);
        const TransitionMatrix t = build_transition_matrix(cfg);
        const InitState init = test::random_init(rng, C);

        OnlineOptions opts;
        opts.solver = SolveMode::exact_dp;
        opts.l_cap = kTestLCap;
        const double offline = solve_exact_dp(m, t, cfg, init, 0, T, kTestLCap).total_reward;
        for (int l : {1, 2, 3}) {
            opts.look_ahead = LookAhead::of(l);
            CHECK(run_online(m, t, cfg, init, opts).total_reward <= offline);
        }
    }
}

TEST_CASE("paper DP update count is exactly C + C^2 (horizon - 1)") {
    Rng rng(42);
    for (const auto [C, T] : {std::pair{2, 5}, std::pair{4, 9}, std::pair{7, 3}}) {
        const ScoreMatrix m = test::random_scores(rng, C, T);
        const EditConfig cfg = test::random_config(rng);
        const TransitionMatrix t = build_transition_matrix(cfg);
        const SolveResult res = solve_paper_dp(m, t, cfg, InitState{0, 1}, 0, T);
        CHECK(res.update_count == C + static_cast<long long>(C) * C * (T - 1));
    }
}

TEST_CASE("mid-timeline windows honor t_start") {
    Rng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const int C = uniform_int(rng, 2, 3);
        const ScoreMatrix wide = test::random_scores(rng, C, 12);
        const EditConfig cfg = test::random_config(rng);
        const TransitionMatrix t = build_transition_matrix(cfg);
        const InitState init = test::random_init(rng, C);
        const int t_start = 4, horizon = 5;

        // same instance expressed as its own matrix starting at zero
        ScoreMatrix window;
        window.camera_ids = wide.camera_ids;
        window.kinds = wide.kinds;
        for (int c = 0; c < C; ++c)
            window.values.push_back(std::vector<double>(wide.values[c].begin() + t_start,
                                                        wide.values[c].begin() + t_start +
                                                            horizon));

        const SolveResult a = solve_exact_dp(wide, t, cfg, init, t_start, horizon, kTestLCap);
        const SolveResult b = solve_exact_dp(window, t, cfg, init, 0, horizon, kTestLCap);
        CHECK(a.sequence == b.sequence);
        CHECK(a.total_reward == b.total_reward);

        const SolveResult c = solve_paper_dp(wide, t, cfg, init, t_start, horizon);
        const SolveResult d = solve_paper_dp(window, t, cfg, init, 0, horizon);
        CHECK(c.sequence == d.sequence);
        CHECK(c.total_reward == d.total_reward);
    }
}

TEST_CASE("solver results rescore to their own totals after round trips") {
    Rng rng(43);
    const ScoreMatrix m = test::random_scores(rng, 3, 8);
    const EditConfig cfg = test::random_config(rng);
    const TransitionMatrix t = build_transition_matrix(cfg);
    const InitState init{1, 2};

    const SolveResult ex = solve_exact_dp(m, t, cfg, init, 0, 8, kTestLCap);
    CHECK(rescore(ex.sequence, m, t, cfg, init) == ex.total_reward);
    CHECK(ex.mode == SolveMode::exact_dp);
    CHECK(to_string(ex.mode) == "exact_dp");
}

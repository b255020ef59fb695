// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "lecedit/rng.hpp"
#include "lecedit/solver.hpp"

using namespace lecedit;

namespace {

ScoreMatrix make_scores(int cameras, int horizon, std::uint64_t seed) {
    Rng rng(seed);
    ScoreMatrix m;
    for (int c = 0; c < cameras; ++c) {
        m.camera_ids.push_back("cam" + std::to_string(c));
        m.kinds.push_back(all_shot_kinds[c % kShotKindCount]);
        std::vector<double> row(static_cast<std::size_t>(horizon));
        for (double& v : row) v = uniform01(rng) * 2.0;
        m.values.push_back(std::move(row));
    }
    return m;
}

}  // namespace

static void BM_PaperDp(benchmark::State& state) {
    const int C = static_cast<int>(state.range(0));
    const int horizon = static_cast<int>(state.range(1));
    const ScoreMatrix m = make_scores(C, horizon, 42);
    const EditConfig cfg = default_config();
    const TransitionMatrix t = build_transition_matrix(cfg);

    for (auto _ : state) {
        auto res = solve_paper_dp(m, t, cfg, InitState{0, 1}, 0, horizon);
        benchmark::DoNotOptimize(res.total_reward);
    }
    state.SetComplexityN(static_cast<std::int64_t>(C) * C * horizon);
}
BENCHMARK(BM_PaperDp)
    ->Args({2, 1000})
    ->Args({4, 1000})
    ->Args({7, 1000})
    ->Args({7, 3000})
    ->Complexity(benchmark::oN);

static void BM_ExactDp(benchmark::State& state) {
    const int C = static_cast<int>(state.range(0));
    const int horizon = static_cast<int>(state.range(1));
    const ScoreMatrix m = make_scores(C, horizon, 43);
    const EditConfig cfg = default_config();
    const TransitionMatrix t = build_transition_matrix(cfg);

    for (auto _ : state) {
        auto res = solve_exact_dp(m, t, cfg, InitState{0, 1}, 0, horizon);
        benchmark::DoNotOptimize(res.total_reward);
    }
}
BENCHMARK(BM_ExactDp)->Args({3, 500})->Args({7, 500})->Args({7, 1500});

static void BM_OnlineChunked(benchmark::State& state) {
    const int look_ahead = static_cast<int>(state.range(0));
    const ScoreMatrix m = make_scores(7, 3000, 44);
    const EditConfig cfg = default_config();
    const TransitionMatrix t = build_transition_matrix(cfg);

    OnlineOptions opts;
    opts.solver = SolveMode::paper_dp;
    opts.look_ahead = LookAhead::of(look_ahead);

    for (auto _ : state) {
        auto res = run_online(m, t, cfg, InitState{0, 1}, opts);
        benchmark::DoNotOptimize(res.total_reward);
    }
}
BENCHMARK(BM_OnlineChunked)->Arg(1)->Arg(10)->Arg(20);

static void BM_Rescore(benchmark::State& state) {
    const int horizon = static_cast<int>(state.range(0));
    const ScoreMatrix m = make_scores(7, horizon, 45);
    const EditConfig cfg = default_config();
    const TransitionMatrix t = build_transition_matrix(cfg);
    Rng rng(46);
    std::vector<int> seq(static_cast<std::size_t>(horizon));
    for (int& v : seq) v = uniform_int(rng, 0, 6);

    for (auto _ : state) {
        benchmark::DoNotOptimize(rescore(seq, m, t, cfg, InitState{0, 1}));
    }
}
BENCHMARK(BM_Rescore)->Arg(1000)->Arg(3000);

BENCHMARK_MAIN();

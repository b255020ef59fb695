// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "lecedit/detectors.hpp"
#include "lecedit/rng.hpp"

using namespace lecedit;

namespace {

FrameGrid make_grid(int side, int channels, std::uint64_t seed) {
    Rng rng(seed);
    FrameGrid g;
    g.rows = g.cols = side;
    g.channels = channels;
    g.values.resize(static_cast<std::size_t>(side) * side * channels);
    for (double& v : g.values) v = uniform01(rng);
    return g;
}

FlowField make_flow(int side, std::uint64_t seed) {
    Rng rng(seed);
    FlowField f;
    f.rows = f.cols = side;
    f.u.resize(static_cast<std::size_t>(side) * side);
    f.v.resize(f.u.size());
    for (double& v : f.u) v = normal(rng, 0.0, 1.0);
    for (double& v : f.v) v = normal(rng, 0.0, 1.0);
    return f;
}

}  // namespace

static void BM_GradDiff(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const FrameGrid a = make_grid(side, 3, 1);
    const FrameGrid b = make_grid(side, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(grad_diff_score(a, b));
}
BENCHMARK(BM_GradDiff)->Arg(32)->Arg(64)->Arg(128);

static void BM_MotionEntropy(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const FlowField f = make_flow(side, 3);
    for (auto _ : state) benchmark::DoNotOptimize(motion_entropy_score(f, 9));
}
BENCHMARK(BM_MotionEntropy)->Arg(32)->Arg(64)->Arg(128);

static void BM_ArAnomaly(benchmark::State& state) {
    const int length = static_cast<int>(state.range(0));
    Rng rng(4);
    std::vector<double> series(static_cast<std::size_t>(length));
    for (double& v : series) v = uniform01(rng);
    DetectorParams p;
    for (auto _ : state) benchmark::DoNotOptimize(ar_anomaly_detect(series, p));
}
BENCHMARK(BM_ArAnomaly)->Arg(1000)->Arg(3000);

static void BM_WindowDrop(benchmark::State& state) {
    const int length = static_cast<int>(state.range(0));
    Rng rng(5);
    std::vector<double> series(static_cast<std::size_t>(length));
    for (double& v : series) v = uniform01(rng);
    DetectorParams p;
    for (auto _ : state) benchmark::DoNotOptimize(window_drop_detect(series, p));
}
BENCHMARK(BM_WindowDrop)->Arg(1000)->Arg(3000);

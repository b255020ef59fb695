// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lecedit/edit_config.hpp"
#include "lecedit/rng.hpp"
#include "lecedit/scoring.hpp"
#include "lecedit/solver.hpp"

namespace lecedit::test {

/// Fabricated score matrix: C cameras cycling through shot kinds, values
/// drawn uniformly from [0, hi).
inline ScoreMatrix random_scores(Rng& rng, int cameras, int horizon, double hi = 3.0) {
    ScoreMatrix m;
    for (int c = 0; c < cameras; ++c) {
        m.camera_ids.push_back("cam" + std::to_string(c));
        m.kinds.push_back(all_shot_kinds[c % kShotKindCount]);
        std::vector<double> row(static_cast<std::size_t>(horizon));
        for (double& v : row) v = uniform01(rng) * hi;
        m.values.push_back(std::move(row));
    }
    return m;
}

/// Randomized but valid config for solver stress tests: short expected shot
/// lengths so the length terms matter inside tiny horizons.
inline EditConfig random_config(Rng& rng, bool with_violations = true) {
    EditConfig cfg = default_config();
    cfg.lambda_e = uniform01(rng);
    cfg.lambda_sw = uniform01(rng);
    cfg.lambda_b = uniform01(rng);
    cfg.epsilon = 0.5 + uniform01(rng);
    cfg.c_sw = uniform01(rng) * 2.0;
    cfg.c_broll = uniform01(rng) * 2.0;
    cfg.l_min = 2.0;
    cfg.l_max = 5.0;
    cfg.l_mean = (cfg.l_min + cfg.l_max) / 2.0;
    for (auto& row : cfg.violations) row.fill(false);
    if (with_violations) {
        for (ShotKind a : all_shot_kinds)
            for (ShotKind b : all_shot_kinds)
                if (a != b && uniform01(rng) < 0.3)
                    cfg.violations[index_of(a)][index_of(b)] = true;
    }
    for (ShotKind k : all_shot_kinds) cfg.broll_set[index_of(k)] = uniform01(rng) < 0.4;
    return cfg;
}

inline InitState random_init(Rng& rng, int cameras) {
    return InitState{uniform_int(rng, 0, cameras - 1), uniform_int(rng, 1, 6)};
}

/// l_cap comfortably past the saturation margin for random_config instances.
inline constexpr int kTestLCap = 60;

}  // namespace lecedit::test

// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lecedit/scoring.hpp"
#include "test_util.hpp"

using namespace lecedit;

namespace {

Scenario single_camera(ShotKind kind, std::vector<int> indicator) {
    Scenario s;
    s.T = static_cast<int>(indicator.size());
    Camera cam;
    cam.id = "c0";
    cam.kind = kind;
    cam.indicator = std::move(indicator);
    s.cameras.push_back(std::move(cam));
    return s;
}

ScoreMatrix one_value_matrix(ShotKind kind, double value) {
    ScoreMatrix m;
    m.camera_ids = {"c0"};
    m.kinds = {kind};
    m.values = {{value}};
    return m;
}

}  // namespace

TEST_CASE("semantic_scores applies default + indicator * weight") {
    const EditConfig cfg = default_config();

    const ScoreMatrix on = semantic_scores(single_camera(ShotKind::SlideCloseUp, {1}), cfg);
    CHECK(on.at(0, 0) == 2.0);

    const ScoreMatrix off = semantic_scores(single_camera(ShotKind::SlideCloseUp, {0}), cfg);
    CHECK(off.at(0, 0) == 1.0);

    const ScoreMatrix ol = semantic_scores(single_camera(ShotKind::OverviewLong, {1}), cfg);
    CHECK(ol.at(0, 0) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("semantic_scores: each camera takes exactly two values; one bit moves one entry") {
    Rng rng(21);
    const EditConfig cfg = default_config();
    Scenario s;
    s.T = 40;
    for (ShotKind k : all_shot_kinds) {
        Camera cam;
        cam.id = std::string(to_string(k));
        cam.kind = k;
        cam.indicator.resize(s.T);
        for (int& v : cam.indicator) v = uniform01(rng) < 0.5 ? 1 : 0;
        s.cameras.push_back(std::move(cam));
    }
    const ScoreMatrix m = semantic_scores(s, cfg);
    for (int c = 0; c < m.camera_count(); ++c) {
        const ShotKind k = m.kinds[c];
        for (int t = 0; t < s.T; ++t) {
            const double v = m.at(c, t);
            CHECK((v == cfg.default_score(k) || v == cfg.default_score(k) + cfg.weight(k)));
        }
    }

    Scenario flipped = s;
    flipped.cameras[2].indicator[7] ^= 1;
    const ScoreMatrix m2 = semantic_scores(flipped, cfg);
    int changed = 0;
    for (int c = 0; c < m.camera_count(); ++c)
        for (int t = 0; t < s.T; ++t)
            if (m.at(c, t) != m2.at(c, t)) {
                ++changed;
                CHECK(std::abs(m.at(c, t) - m2.at(c, t)) ==
                      doctest::Approx(cfg.weight(m.kinds[c])).epsilon(1e-12));
                CHECK(c == 2);
                CHECK(t == 7);
            }
    CHECK(changed == 1);
}

TEST_CASE("build_transition_matrix encodes the violation sets") {
    const EditConfig cfg = default_config();
    const TransitionMatrix t = build_transition_matrix(cfg);

    CHECK(t.at(ShotKind::LeftBlackboardCloseUp, ShotKind::RightBlackboardCloseUp) == -1.0);
    CHECK(t.at(ShotKind::RightBlackboardCloseUp, ShotKind::LeftBlackboardCloseUp) == -1.0);
    CHECK(t.at(ShotKind::SlideCloseUp, ShotKind::StudentLong) == -1.0);
    CHECK(t.at(ShotKind::StudentLong, ShotKind::SlideCloseUp) == -1.0);
    CHECK(t.at(ShotKind::LeftMedium, ShotKind::OverviewLong) == 1.0);
    CHECK(t.at(ShotKind::LeftMedium, ShotKind::SlideCloseUp) == 1.0);
    for (ShotKind k : all_shot_kinds) CHECK(t.at(k, k) == 1.0);

    for (ShotKind a : all_shot_kinds)
        for (ShotKind b : all_shot_kinds)
            CHECK((t.at(a, b) == cfg.epsilon || t.at(a, b) == -cfg.epsilon));
}

TEST_CASE("build_transition_matrix: empty violation sets give +epsilon everywhere") {
    EditConfig cfg = default_config();
    cfg.epsilon = 2.5;
    for (auto& row : cfg.violations) row.fill(false);
    const TransitionMatrix t = build_transition_matrix(cfg);
    for (ShotKind a : all_shot_kinds)
        for (ShotKind b : all_shot_kinds) CHECK(t.at(a, b) == 2.5);
}

TEST_CASE("switch_penalty midpoints and saturation") {
    EditConfig cfg = default_config();
    cfg.c_sw = 1.75;

    CHECK(switch_penalty(cfg.l_max, false, cfg) ==
          doctest::Approx(-cfg.c_sw / 2).epsilon(1e-12));
    CHECK(switch_penalty(cfg.l_min, true, cfg) ==
          doctest::Approx(-cfg.c_sw / 2).epsilon(1e-12));
    CHECK(switch_penalty(cfg.l_max + 20, false, cfg) ==
          doctest::Approx(-cfg.c_sw).epsilon(1e-8));
    CHECK(std::abs(switch_penalty(cfg.l_max + 20, false, cfg) + cfg.c_sw) < 1e-8);
}

TEST_CASE("switch_penalty monotonicity and bounds over a 1..200 sweep") {
    const EditConfig cfg = default_config();
    double prev_stay = 0.0, prev_switch = -cfg.c_sw;
    for (int L = 1; L <= 200; ++L) {
        const double stay = switch_penalty(L, false, cfg);
        const double sw = switch_penalty(L, true, cfg);
        // the open interval (-c_sw, 0) closes at -c_sw once the sigmoid
        // saturates past double precision
        CHECK(stay >= -cfg.c_sw);
        CHECK(stay < 0.0);
        CHECK(sw >= -cfg.c_sw);
        CHECK(sw < 0.0);
        if (L > 1) {
            CHECK(stay <= prev_stay);  // staying gets worse with length
            CHECK(sw >= prev_switch);  // switching gets cheaper with length
        }
        prev_stay = stay;
        prev_switch = sw;
    }
}

TEST_CASE("broll_incentive fires only past half the mean length and only for insert shots") {
    const EditConfig cfg = default_config();  // l_mean = 40
    CHECK(broll_incentive(21, ShotKind::OverviewLong, cfg) == cfg.c_broll);
    CHECK(broll_incentive(21, ShotKind::LeftMedium, cfg) == 0.0);
    CHECK(broll_incentive(200, ShotKind::RightMedium, cfg) == 0.0);
    CHECK(broll_incentive(5, ShotKind::OverviewLong, cfg) == 0.0);
    CHECK(broll_incentive(20, ShotKind::OverviewLong, cfg) == 0.0);  // strict >
    CHECK(broll_incentive(21, ShotKind::SlideCloseUp, cfg) == cfg.c_broll);
    CHECK(broll_incentive(21, ShotKind::StudentLong, cfg) == cfg.c_broll);
}

TEST_CASE("step_reward: frozen stay cases at L = l_max") {
    const EditConfig cfg = default_config();
    const TransitionMatrix t = build_transition_matrix(cfg);

    // staying on a B-roll kind: 0.3*1*2 + 0.3*1 + 0.4*(-1/2) = 0.7
    const ScoreMatrix sc = one_value_matrix(ShotKind::SlideCloseUp, 2.0);
    CHECK(step_reward(0, 0, 0, 60, sc, t, cfg) == doctest::Approx(0.7).epsilon(1e-12));

    // staying on a non-B-roll kind: 0.3*1*2 + 0 + 0.4*(-1/2) = 0.4
    const ScoreMatrix lm = one_value_matrix(ShotKind::LeftMedium, 2.0);
    CHECK(step_reward(0, 0, 0, 60, lm, t, cfg) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("step_reward: zero lambdas zero the reward; violating term isolates") {
    EditConfig cfg = default_config();
    cfg.lambda_e = cfg.lambda_sw = cfg.lambda_b = 0.0;
    const TransitionMatrix t = build_transition_matrix(cfg);

    ScoreMatrix m;
    m.camera_ids = {"a", "b"};
    m.kinds = {ShotKind::LeftBlackboardCloseUp, ShotKind::RightBlackboardCloseUp};
    m.values = {{1.5, 2.5}, {0.5, 3.5}};
    for (int k = 0; k < 2; ++k)
        for (int c = 0; c < 2; ++c)
            for (int t2 = 0; t2 < 2; ++t2)
                for (int L : {1, 7, 80}) CHECK(step_reward(k, c, t2, L, m, t, cfg) == 0.0);

    cfg.lambda_e = 0.6;
    const TransitionMatrix t2 = build_transition_matrix(cfg);
    // lb -> rb violates: reward = -lambda_e * eps * r
    CHECK(step_reward(0, 1, 1, 9, m, t2, cfg) ==
          doctest::Approx(-0.6 * cfg.epsilon * 3.5).epsilon(1e-12));
}

TEST_CASE("step_reward is affine in each lambda") {
    Rng rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        EditConfig cfg = test::random_config(rng);
        const ScoreMatrix m = test::random_scores(rng, 3, 4);
        const TransitionMatrix t = build_transition_matrix(cfg);
        const int k = uniform_int(rng, 0, 2), c = uniform_int(rng, 0, 2);
        const int tt = uniform_int(rng, 0, 3), L = uniform_int(rng, 1, 9);

        auto eval = [&](double le, double lsw, double lb) {
            EditConfig e = cfg;
            e.lambda_e = le;
            e.lambda_sw = lsw;
            e.lambda_b = lb;
            return step_reward(k, c, tt, L, m, t, e);
        };
        const double base = eval(0, 0, 0);
        CHECK(base == 0.0);
        const double de = eval(1, 0, 0), dsw = eval(0, 1, 0), db = eval(0, 0, 1);
        for (int i = 0; i < 3; ++i) {
            const double a = uniform01(rng) * 2.0, b = uniform01(rng) * 2.0,
                         g = uniform01(rng) * 2.0;
            CHECK(eval(a, b, g) == doctest::Approx(a * de + b * dsw + g * db).epsilon(1e-12));
        }
    }
}

TEST_CASE("scaling defaults and weights scales the semantic term only") {
    Rng rng(23);
    EditConfig cfg = default_config();
    cfg.lambda_sw = cfg.lambda_b = 0.0;
    const TransitionMatrix t = build_transition_matrix(cfg);

    Scenario s;
    s.T = 12;
    for (ShotKind k : all_shot_kinds) {
        Camera cam;
        cam.id = std::string(to_string(k));
        cam.kind = k;
        cam.indicator.resize(s.T);
        for (int& v : cam.indicator) v = uniform01(rng) < 0.5 ? 1 : 0;
        s.cameras.push_back(std::move(cam));
    }

    const double alpha = 2.75;
    EditConfig scaled = cfg;
    for (std::size_t i = 0; i < kShotKindCount; ++i) {
        scaled.weights[i] *= alpha;
        scaled.defaults[i] *= alpha;
    }

    const ScoreMatrix base = semantic_scores(s, cfg);
    const ScoreMatrix big = semantic_scores(s, scaled);
    for (int c = 0; c < base.camera_count(); ++c)
        for (int tt = 0; tt < s.T; ++tt)
            CHECK(big.at(c, tt) == doctest::Approx(alpha * base.at(c, tt)).epsilon(1e-12));

    // the semantic step term scales; the per-instant argmax is unchanged
    for (int tt = 0; tt < s.T; ++tt) {
        for (int k = 0; k < 7; ++k) {
            int best_base = 0, best_big = 0;
            for (int c = 1; c < 7; ++c) {
                auto term = [&](const ScoreMatrix& m, int cc) {
                    return t.at(m.kinds[k], m.kinds[cc]) * m.at(cc, tt);
                };
                if (term(base, c) > term(base, best_base)) best_base = c;
                if (term(big, c) > term(big, best_big)) best_big = c;
            }
            CHECK(best_base == best_big);
        }
    }
}

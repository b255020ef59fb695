// SPDX-License-Identifier: Apache-2.0
#include "lecedit/edit_config.hpp"

#include <cmath>
#include <string>

namespace lecedit {
namespace {

void set_mutual_violation(EditConfig& cfg, ShotKind a, ShotKind b) {
    cfg.violations[index_of(a)][index_of(b)] = true;
    cfg.violations[index_of(b)][index_of(a)] = true;
}

}  // namespace

EditConfig default_config() {
    EditConfig cfg;

    auto set = [&cfg](ShotKind k, double v) {
        cfg.weights[index_of(k)] = v;
        cfg.defaults[index_of(k)] = v;
    };
    set(ShotKind::RightBlackboardCloseUp, 0.8);
    set(ShotKind::LeftBlackboardCloseUp, 0.8);
    set(ShotKind::SlideCloseUp, 1.0);
    set(ShotKind::StudentLong, 0.4);
    set(ShotKind::LeftMedium, 0.6);
    set(ShotKind::RightMedium, 0.6);
    set(ShotKind::OverviewLong, 0.2);

    cfg.epsilon = 1.0;
    cfg.c_sw = 1.0;
    cfg.c_broll = 1.0;
    cfg.l_min = 20.0;
    cfg.l_max = 60.0;
    cfg.l_mean = (cfg.l_min + cfg.l_max) / 2.0;

    cfg.broll_set[index_of(ShotKind::StudentLong)] = true;
    cfg.broll_set[index_of(ShotKind::OverviewLong)] = true;
    cfg.broll_set[index_of(ShotKind::SlideCloseUp)] = true;

    // Crossing the line between the two blackboard views, and jumping
    // directly between any close-up and the student long shot, break the
    // standard transition rules; everything else is acceptable.
    set_mutual_violation(cfg, ShotKind::LeftBlackboardCloseUp, ShotKind::RightBlackboardCloseUp);
    for (ShotKind cu : {ShotKind::LeftBlackboardCloseUp, ShotKind::RightBlackboardCloseUp,
                        ShotKind::SlideCloseUp})
        set_mutual_violation(cfg, cu, ShotKind::StudentLong);

    cfg.lambda_sw = 0.4;
    cfg.lambda_e = 0.3;
    cfg.lambda_b = 0.3;

    cfg.look_ahead = LookAhead::inf();
    cfg.initial = InitialCamera{};
    cfg.tie_break = "lowest_index";
    return cfg;
}

std::vector<std::string> validate_config(const EditConfig& cfg) {
    std::vector<std::string> out;

    for (ShotKind k : all_shot_kinds) {
        if (!(cfg.weight(k) >= 0.0) || !std::isfinite(cfg.weight(k)))
            out.push_back("weight for '" + std::string(to_string(k)) + "' must be finite and >= 0");
        if (!(cfg.default_score(k) >= 0.0) || !std::isfinite(cfg.default_score(k)))
            out.push_back("default for '" + std::string(to_string(k)) + "' must be finite and >= 0");
    }
    if (!(cfg.epsilon > 0.0)) out.push_back("epsilon must be > 0");
    if (!(cfg.c_sw >= 0.0)) out.push_back("c_sw must be >= 0");
    if (!(cfg.c_broll >= 0.0)) out.push_back("c_broll must be >= 0");
    if (!(cfg.l_min > 0.0 && cfg.l_min < cfg.l_max))
        out.push_back("expected 0 < l_min < l_max");
    if (!(cfg.l_mean > 0.0)) out.push_back("l_mean must be > 0");

    for (double lam : {cfg.lambda_e, cfg.lambda_sw, cfg.lambda_b})
        if (!(lam >= 0.0) || !std::isfinite(lam))
            out.push_back("lambda weights must be finite and >= 0");

    if (!cfg.look_ahead.infinite && cfg.look_ahead.value < 1)
        out.push_back("look_ahead must be >= 1 or \"infinite\"");
    if (cfg.initial.run_length < 1) out.push_back("initial run_length must be >= 1");
    if (cfg.tie_break != "lowest_index")
        out.push_back("unsupported tie_break '" + cfg.tie_break + "' (only \"lowest_index\")");

    for (ShotKind k : all_shot_kinds)
        if (cfg.violates(k, k))
            out.push_back("violation set of '" + std::string(to_string(k)) +
                          "' may not contain itself");
    return out;
}

}  // namespace lecedit

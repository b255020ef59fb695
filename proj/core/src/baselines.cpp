// SPDX-License-Identifier: Apache-2.0
#include "lecedit/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lecedit/rng.hpp"

namespace lecedit {
namespace {

std::vector<std::string> camera_ids_of(const Scenario& s) {
    std::vector<std::string> ids;
    ids.reserve(s.cameras.size());
    for (const Camera& cam : s.cameras) ids.push_back(cam.id);
    return ids;
}

int argmax_at(const ScoreMatrix& scores, int t) {
    int best = 0;
    for (int c = 1; c < scores.camera_count(); ++c)
        if (scores.at(c, t) > scores.at(best, t)) best = c;
    return best;
}

}  // namespace

EditDecisionList randseg(const Scenario& s, const BaselineParams& p) {
    if (p.randseg_n < 1) throw std::invalid_argument("randseg: segment length must be >= 1");
    if (s.T < 1 || s.cameras.empty())
        throw std::invalid_argument("randseg: scenario must have cameras and T >= 1");

    Rng rng(p.rng_seed);
    const int C = s.camera_count();
    std::vector<int> seq(static_cast<std::size_t>(s.T));
    for (int start = 0; start < s.T; start += p.randseg_n) {
        const int cam = uniform_int(rng, 0, C - 1);
        const int end = std::min(start + p.randseg_n, s.T);
        for (int t = start; t < end; ++t) seq[t] = cam;
    }
    return edl_from_sequence(seq, camera_ids_of(s));
}

EditDecisionList ranking(const Scenario& s, const ScoreMatrix& scores,
                         const BaselineParams& p) {
    if (!(p.ranking_mean > 0.0)) throw std::invalid_argument("ranking: mean must be > 0");
    if (!(p.ranking_std >= 0.0)) throw std::invalid_argument("ranking: std must be >= 0");
    if (s.T < 1 || scores.horizon() != s.T)
        throw std::invalid_argument("ranking: scores do not cover the scenario timeline");

    Rng rng(p.rng_seed);
    auto draw_duration = [&]() {
        const double d = std::round(normal(rng, p.ranking_mean, p.ranking_std));
        return static_cast<int>(std::clamp(d, 1.0, static_cast<double>(s.T)));
    };

    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(s.T));
    int cam = argmax_at(scores, 0);
    int expiry = draw_duration();
    for (int t = 0; t < s.T; ++t) {
        if (t == expiry) {
            // Shot expired: jump to the currently best camera. If that is
            // already on air the shot simply extends until the next expiry.
            cam = argmax_at(scores, t);
            expiry = t + draw_duration();
        }
        seq.push_back(cam);
    }
    return edl_from_sequence(seq, camera_ids_of(s));
}

FsmSpec default_fsm_spec(const Scenario& s, const EditConfig& cfg) {
    FsmSpec spec;
    if (s.cameras.empty()) return spec;
    spec.initial_camera = s.cameras.front().id;
    const int dwell = std::max(1, static_cast<int>(std::lround(cfg.l_max)));
    for (std::size_t i = 0; i < s.cameras.size(); ++i) {
        const std::string& id = s.cameras[i].id;
        spec.rules.push_back({id, id});
        spec.max_dwell[id] = dwell;
        spec.default_next[id] = s.cameras[(i + 1) % s.cameras.size()].id;
    }
    return spec;
}

EditDecisionList fsm(const Scenario& s, const BaselineParams& p) {
    const FsmSpec& spec = p.fsm_spec;
    if (s.T < 1 || s.cameras.empty())
        throw std::invalid_argument("fsm: scenario must have cameras and T >= 1");
    if (spec.initial_camera.empty() || s.index_of(spec.initial_camera) < 0)
        throw std::invalid_argument("fsm: initial state '" + spec.initial_camera +
                                    "' is not a camera of the scenario");
    for (const FsmRule& r : spec.rules) {
        if (s.index_of(r.trigger_camera) < 0)
            throw std::invalid_argument("fsm: rule trigger '" + r.trigger_camera +
                                        "' is not a camera of the scenario");
        if (s.index_of(r.target_camera) < 0)
            throw std::invalid_argument("fsm: rule target '" + r.target_camera +
                                        "' is not a camera of the scenario");
    }
    for (const auto& [state, next] : spec.default_next)
        if (s.index_of(state) < 0 || s.index_of(next) < 0)
            throw std::invalid_argument("fsm: default transition references unknown camera");

    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(s.T));
    int state = s.index_of(spec.initial_camera);
    int dwell = 0;
    for (int t = 0; t < s.T; ++t) {
        int fired = -1;
        for (const FsmRule& r : spec.rules) {
            const int trig = s.index_of(r.trigger_camera);
            if (s.cameras[trig].indicator[t] == 1) {
                fired = s.index_of(r.target_camera);
                break;  // rules listed earlier take priority
            }
        }
        if (fired >= 0) {
            state = fired;
            dwell = 1;  // an active event (re)justifies its shot
        } else {
            ++dwell;
            const auto md = spec.max_dwell.find(s.cameras[state].id);
            if (md != spec.max_dwell.end() && dwell > md->second) {
                const auto dn = spec.default_next.find(s.cameras[state].id);
                if (dn != spec.default_next.end()) {
                    state = s.index_of(dn->second);
                    dwell = 1;
                }
            }
        }
        seq.push_back(state);
    }
    return edl_from_sequence(seq, camera_ids_of(s));
}

}  // namespace lecedit

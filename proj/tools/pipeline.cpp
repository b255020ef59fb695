// SPDX-License-Identifier: Apache-2.0
#include "pipeline.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "lecedit/errors.hpp"
#include "lecedit/rng.hpp"

namespace lecedit::tools {
namespace {

std::string lmin_label(const EditConfig& cfg, double factor) {
    const int l = std::max(1, static_cast<int>(std::lround(cfg.l_min * factor)));
    return std::to_string(l);
}

PipelineCell run_cell(const Scenario& scenario, const std::string& scenario_name,
                      const std::string& method, const EditConfig& cfg,
                      const PipelineOptions& opts, std::uint64_t cell_seed) {
    PipelineCell cell;
    cell.scenario = scenario_name;
    cell.method = method;
    try {
        const ScoreMatrix scores = semantic_scores(scenario, cfg);
        const TransitionMatrix t_mat = build_transition_matrix(cfg);

        BaselineParams params;
        params.rng_seed = cell_seed;
        params.randseg_n = opts.randseg_n;
        params.ranking_mean = (cfg.l_min + cfg.l_max) / 2.0;
        params.ranking_std = 10.0;

        if (method.rfind("Randseg", 0) == 0) {
            cell.edl = randseg(scenario, params);
        } else if (method == "Ranking") {
            cell.edl = ranking(scenario, scores, params);
        } else if (method == "FSM") {
            params.fsm_spec = default_fsm_spec(scenario, cfg);
            cell.edl = fsm(scenario, params);
        } else {
            OnlineOptions online;
            online.l_cap = opts.exact_l_cap;
            if (method == "Exact(inf)") {
                online.solver = SolveMode::exact_dp;
                online.look_ahead = LookAhead::inf();
            } else if (method.rfind("Optim(", 0) == 0) {
                online.solver = opts.optimizer;
                const std::string arg = method.substr(6, method.size() - 7);
                online.look_ahead =
                    arg == "inf" ? LookAhead::inf() : LookAhead::of(std::stoi(arg));
            } else {
                throw std::invalid_argument("unknown method '" + method + "'");
            }
            const InitState init = initial_state(scores, cfg);
            const SolveResult res = run_online(scores, t_mat, cfg, init, online);
            cell.edl = edl_from_sequence(res.sequence, scores.camera_ids);
        }

        cell.report = compute_metrics(cell.edl, scores, t_mat, cfg, method);
        cell.ok = true;
    } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
    }
    return cell;
}

}  // namespace

std::vector<std::string> pipeline_methods(const EditConfig& cfg, int randseg_n) {
    return {
        "Randseg(" + std::to_string(randseg_n) + ")",
        "Ranking",
        "FSM",
        "Exact(inf)",
        "Optim(1)",
        "Optim(" + lmin_label(cfg, 0.5) + ")",
        "Optim(" + lmin_label(cfg, 1.0) + ")",
        "Optim(inf)",
    };
}

PipelineResult run_pipeline(std::span<const Scenario> scenarios, const EditConfig& cfg,
                            const PipelineOptions& opts) {
    PipelineResult result;
    result.methods = opts.methods.empty() ? pipeline_methods(cfg, opts.randseg_n) : opts.methods;
    const std::size_t n_methods = result.methods.size();
    result.cells.resize(scenarios.size() * n_methods);

    const int jobs = std::max(1, opts.jobs);
    std::vector<std::future<void>> futures;
    std::size_t next = 0;
    const std::size_t total = result.cells.size();

    auto worker = [&](std::size_t index) {
        const std::size_t si = index / n_methods;
        const std::size_t mi = index % n_methods;
        const std::string scenario_name = "scenario_" + std::to_string(si);
        result.cells[index] = run_cell(scenarios[si], scenario_name, result.methods[mi], cfg,
                                       opts, mix_seed(opts.seed, si, mi));
    };

    if (jobs == 1) {
        for (; next < total; ++next) worker(next);
    } else {
        while (next < total) {
            futures.clear();
            const std::size_t batch = std::min<std::size_t>(jobs, total - next);
            for (std::size_t b = 0; b < batch; ++b)
                futures.push_back(std::async(std::launch::async, worker, next + b));
            for (auto& f : futures) f.get();
            next += batch;
        }
    }

    result.all_ok = true;
    for (std::size_t mi = 0; mi < n_methods; ++mi) {
        ComparisonRow row;
        row.method = result.methods[mi];
        int ok_count = 0;
        for (std::size_t si = 0; si < scenarios.size(); ++si) {
            const PipelineCell& cell = result.cells[si * n_methods + mi];
            if (!cell.ok) {
                result.all_ok = false;
                continue;
            }
            ++ok_count;
            row.r_avg += cell.report.r_avg;
            row.r_max += cell.report.r_max;
            row.r_trans += cell.report.r_trans;
            row.n_sw += cell.report.n_sw;
            row.l_avg += cell.report.l_avg;
        }
        if (ok_count == 0) {
            row.status = "failed " + std::to_string(scenarios.size()) + "/" +
                         std::to_string(scenarios.size());
        } else {
            row.r_avg /= ok_count;
            row.r_max /= ok_count;
            row.r_trans /= ok_count;
            row.n_sw /= ok_count;
            row.l_avg /= ok_count;
            if (ok_count != static_cast<int>(scenarios.size()))
                row.status = "failed " +
                             std::to_string(scenarios.size() - ok_count) + "/" +
                             std::to_string(scenarios.size());
        }
        result.aggregate.push_back(std::move(row));
    }
    return result;
}

BaselineParams baseline_params_from_json(const nlohmann::json& j, const Scenario& s,
                                         const EditConfig& cfg) {
    if (!j.is_object()) throw ParseError("baseline params: expected an object");
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        if (k != "randseg_n" && k != "ranking_mean" && k != "ranking_std" && k != "rng_seed" &&
            k != "fsm")
            throw ParseError("baseline params: unknown field '" + k + "'");
    }

    BaselineParams p;
    p.ranking_mean = (cfg.l_min + cfg.l_max) / 2.0;
    p.fsm_spec = default_fsm_spec(s, cfg);
    if (j.contains("randseg_n")) p.randseg_n = j.at("randseg_n").get<int>();
    if (j.contains("ranking_mean")) p.ranking_mean = j.at("ranking_mean").get<double>();
    if (j.contains("ranking_std")) p.ranking_std = j.at("ranking_std").get<double>();
    if (j.contains("rng_seed")) p.rng_seed = j.at("rng_seed").get<std::uint64_t>();

    if (j.contains("fsm")) {
        const nlohmann::json& f = j.at("fsm");
        if (!f.is_object()) throw ParseError("baseline params: 'fsm' must be an object");
        FsmSpec spec;
        spec.initial_camera = f.value("initial", s.cameras.empty() ? "" : s.cameras[0].id);
        if (f.contains("rules"))
            for (const auto& r : f.at("rules"))
                spec.rules.push_back({r.at("when").get<std::string>(),
                                      r.at("go").get<std::string>()});
        if (f.contains("max_dwell"))
            for (const auto& item : f.at("max_dwell").items())
                spec.max_dwell[item.key()] = item.value().get<int>();
        if (f.contains("default_next"))
            for (const auto& item : f.at("default_next").items())
                spec.default_next[item.key()] = item.value().get<std::string>();
        p.fsm_spec = std::move(spec);
    }
    return p;
}

nlohmann::json report_to_json(const MetricsReport& r) {
    nlohmann::json j;
    j["method"] = r.method;
    j["R_avg"] = r.r_avg;
    j["r_max"] = r.r_max;
    j["r_trans"] = r.r_trans;
    j["n_sw"] = r.n_sw;
    j["L_avg"] = r.l_avg;
    j["T"] = r.timeline;
    return j;
}

MetricsReport report_from_json(const nlohmann::json& j) {
    MetricsReport r;
    r.method = j.at("method").get<std::string>();
    r.r_avg = j.at("R_avg").get<double>();
    r.r_max = j.at("r_max").get<double>();
    r.r_trans = j.at("r_trans").get<double>();
    r.n_sw = j.at("n_sw").get<int>();
    r.l_avg = j.at("L_avg").get<double>();
    r.timeline = j.at("T").get<int>();
    return r;
}

}  // namespace lecedit::tools

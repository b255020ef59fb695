// SPDX-License-Identifier: Apache-2.0
//
// lecedit: multi-camera lecture editing toolkit.
//
//   detect    regenerate event indicators from feature streams
//   score     semantic focus scores as CSV
//   edit      solve for a camera sequence (online / look-ahead / offline)
//   baseline  reference editors: randseg, ranking, fsm
//   evaluate  production statistics of an EDL
//   compare   method comparison table from report files
//   simulate  synthetic scenario generation
//   pipeline  full benchmark over a scenario directory

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "lecedit/detectors.hpp"
#include "lecedit/json_io.hpp"
#include "lecedit/version.hpp"
#include "manifest.hpp"
#include "pipeline.hpp"

using namespace lecedit;
namespace fs = std::filesystem;

namespace {

EditConfig load_config_or_default(const std::string& path) {
    return path.empty() ? default_config() : load_config(path);
}

LookAhead resolve_look_ahead(const std::string& mode, int flag_value, const EditConfig& cfg) {
    if (mode == "online") return LookAhead::of(1);
    if (mode == "offline") return LookAhead::inf();
    if (flag_value > 0) return LookAhead::of(flag_value);
    return cfg.look_ahead;
}

std::string scores_to_csv(const ScoreMatrix& m) {
    std::ostringstream out;
    for (int c = 0; c < m.camera_count(); ++c) {
        out << m.camera_ids[c];
        for (int t = 0; t < m.horizon(); ++t) out << ',' << format_double(m.at(c, t));
        out << '\n';
    }
    return out.str();
}

int run_detect(const std::string& scenario_path, const std::string& out_path,
               const DetectorParams& params) {
    tools::RunManifest manifest;
    manifest.command = "detect";
    manifest.inputs = {scenario_path};
    tools::StageTimer timer(manifest);

    Scenario s = load_scenario(scenario_path);
    timer.record("load");
    const int refreshed = refresh_indicators(s, params);
    timer.record("detect");
    save_scenario(s, out_path);
    timer.record("save");

    manifest.outputs = {out_path};
    tools::write_manifest(manifest, out_path);
    std::cout << "refreshed indicators for " << refreshed << " cameras -> " << out_path << "\n";
    return 0;
}

int run_score(const std::string& scenario_path, const std::string& config_path,
              const std::string& out_path) {
    tools::RunManifest manifest;
    manifest.command = "score";
    manifest.inputs = {scenario_path};
    if (!config_path.empty()) manifest.inputs.push_back(config_path);
    tools::StageTimer timer(manifest);

    const Scenario s = load_scenario(scenario_path);
    const EditConfig cfg = load_config_or_default(config_path);
    manifest.config_hash = tools::config_hash(cfg);
    timer.record("load");

    const ScoreMatrix m = semantic_scores(s, cfg);
    write_text_file(out_path, scores_to_csv(m));
    timer.record("score");

    manifest.outputs = {out_path};
    tools::write_manifest(manifest, out_path);
    std::cout << "wrote " << m.camera_count() << " x " << m.horizon() << " score matrix -> "
              << out_path << "\n";
    return 0;
}

int run_edit(const std::string& scenario_path, const std::string& config_path,
             const std::string& mode, int look_ahead_flag, const std::string& solver_name,
             int l_cap, const std::string& out_path) {
    tools::RunManifest manifest;
    manifest.command = "edit";
    manifest.inputs = {scenario_path};
    if (!config_path.empty()) manifest.inputs.push_back(config_path);
    tools::StageTimer timer(manifest);

    const Scenario s = load_scenario(scenario_path);
    const EditConfig cfg = load_config_or_default(config_path);
    manifest.config_hash = tools::config_hash(cfg);
    timer.record("load");

    const ScoreMatrix scores = semantic_scores(s, cfg);
    const TransitionMatrix t_mat = build_transition_matrix(cfg);

    OnlineOptions opts;
    opts.look_ahead = resolve_look_ahead(mode, look_ahead_flag, cfg);
    opts.solver = solver_name == "exact" ? SolveMode::exact_dp : SolveMode::paper_dp;
    opts.l_cap = l_cap;

    const InitState init = initial_state(scores, cfg);
    const SolveResult res = run_online(scores, t_mat, cfg, init, opts);
    timer.record("solve");

    save_edl(edl_from_sequence(res.sequence, scores.camera_ids), out_path);
    timer.record("save");

    manifest.outputs = {out_path};
    tools::write_manifest(manifest, out_path);
    std::cout << "total_reward " << format_double(res.total_reward) << "\n";
    return 0;
}

int run_baseline(const std::string& method, const std::string& scenario_path,
                 const std::string& config_path, const std::string& params_path,
                 std::uint64_t seed, const std::string& out_path) {
    tools::RunManifest manifest;
    manifest.command = "baseline";
    manifest.seed = seed;
    manifest.inputs = {scenario_path};
    if (!config_path.empty()) manifest.inputs.push_back(config_path);
    if (!params_path.empty()) manifest.inputs.push_back(params_path);
    tools::StageTimer timer(manifest);

    const Scenario s = load_scenario(scenario_path);
    const EditConfig cfg = load_config_or_default(config_path);
    manifest.config_hash = tools::config_hash(cfg);

    BaselineParams params;
    if (params_path.empty()) {
        params.ranking_mean = (cfg.l_min + cfg.l_max) / 2.0;
        params.fsm_spec = default_fsm_spec(s, cfg);
    } else {
        params = tools::baseline_params_from_json(
            nlohmann::json::parse(read_text_file(params_path)), s, cfg);
    }
    params.rng_seed = seed;
    timer.record("load");

    EditDecisionList edl;
    if (method == "randseg") {
        edl = randseg(s, params);
    } else if (method == "ranking") {
        edl = ranking(s, semantic_scores(s, cfg), params);
    } else {
        edl = fsm(s, params);
    }
    timer.record("run");

    save_edl(edl, out_path);
    manifest.outputs = {out_path};
    tools::write_manifest(manifest, out_path);
    std::cout << method << ": " << edl.segments.size() << " segments -> " << out_path << "\n";
    return 0;
}

int run_evaluate(const std::string& edl_path, const std::string& scenario_path,
                 const std::string& config_path, const std::string& name,
                 const std::string& out_path, const std::string& format,
                 const std::string& svg_path) {
    tools::RunManifest manifest;
    manifest.command = "evaluate";
    manifest.inputs = {edl_path, scenario_path};
    if (!config_path.empty()) manifest.inputs.push_back(config_path);
    tools::StageTimer timer(manifest);

    const EditDecisionList edl = load_edl(edl_path);
    const Scenario s = load_scenario(scenario_path);
    const EditConfig cfg = load_config_or_default(config_path);
    manifest.config_hash = tools::config_hash(cfg);
    timer.record("load");

    const ScoreMatrix scores = semantic_scores(s, cfg);
    const TransitionMatrix t_mat = build_transition_matrix(cfg);
    const std::string method = name.empty() ? fs::path(edl_path).stem().string() : name;
    const MetricsReport rep = compute_metrics(edl, scores, t_mat, cfg, method);
    timer.record("evaluate");

    if (format == "csv") {
        const std::vector<ComparisonRow> rows = {ComparisonRow::from_report(rep)};
        write_text_file(out_path, render_comparison_csv(rows));
    } else {
        write_text_file(out_path, canonical_json(tools::report_to_json(rep)));
    }
    manifest.outputs = {out_path};

    if (!svg_path.empty()) {
        write_text_file(svg_path, render_timeline_svg(edl, scores.camera_ids, s.T));
        manifest.outputs.push_back(svg_path);
    }
    tools::write_manifest(manifest, out_path);
    std::cout << "R_avg " << format_double(rep.r_avg) << "  r_max " << format_double(rep.r_max)
              << "  r_trans " << format_double(rep.r_trans) << "  n_sw " << rep.n_sw
              << "  L_avg " << format_double(rep.l_avg) << "\n";
    return 0;
}

int run_compare(const std::vector<std::string>& report_paths, const std::string& out_path,
                const std::string& format) {
    tools::RunManifest manifest;
    manifest.command = "compare";
    manifest.inputs = report_paths;
    tools::StageTimer timer(manifest);

    std::vector<ComparisonRow> rows;
    for (const std::string& path : report_paths) {
        const MetricsReport rep =
            tools::report_from_json(nlohmann::json::parse(read_text_file(path)));
        rows.push_back(ComparisonRow::from_report(rep));
    }
    timer.record("load");

    const std::string table =
        format == "csv" ? render_comparison_csv(rows) : render_comparison_text(rows);
    write_text_file(out_path, table);
    manifest.outputs = {out_path};
    tools::write_manifest(manifest, out_path);
    std::cout << table;
    return 0;
}

int run_simulate(const std::string& script_path, bool suite, std::uint64_t seed,
                 const std::string& out, const std::string& features) {
    const FeatureSynthesis synth =
        features == "none" ? FeatureSynthesis::none : FeatureSynthesis::full;

    tools::RunManifest manifest;
    manifest.command = "simulate";
    manifest.seed = seed;
    tools::StageTimer timer(manifest);

    if (suite) {
        fs::create_directories(out);
        const auto scenarios = benchmark_suite(seed, synth);
        timer.record("generate");
        for (std::size_t i = 0; i < scenarios.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "scenario_%02zu.json", i);
            const fs::path p = fs::path(out) / name;
            save_scenario(scenarios[i], p);
            manifest.outputs.push_back(p.string());
        }
        timer.record("save");
        tools::write_manifest(manifest, fs::path(out) / "suite");
        std::cout << "wrote " << scenarios.size() << " scenarios -> " << out << "\n";
    } else {
        manifest.inputs = {script_path};
        const EventScript script = load_script(script_path);
        const Scenario s = generate(script, synth);
        timer.record("generate");
        // --out may name the target file or an existing directory
        fs::path target = out;
        if (fs::is_directory(target)) target /= "scenario.json";
        save_scenario(s, target);
        timer.record("save");
        manifest.outputs = {target.string()};
        tools::write_manifest(manifest, target);
        std::cout << "wrote scenario (T=" << s.T << ") -> " << target.string() << "\n";
    }
    return 0;
}

int run_pipeline_cmd(const std::string& scenario_dir, const std::string& config_path,
                     std::uint64_t seed, const std::string& out_dir, const std::string& format,
                     int jobs, const std::string& solver_name, int randseg_n,
                     const std::vector<std::string>& methods) {
    tools::RunManifest manifest;
    manifest.command = "pipeline";
    manifest.seed = seed;
    if (!config_path.empty()) manifest.inputs.push_back(config_path);
    tools::StageTimer timer(manifest);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(scenario_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            entry.path().filename().string().find("manifest") == std::string::npos)
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "pipeline: no scenario files in " << scenario_dir << "\n";
        return 1;
    }

    std::vector<Scenario> scenarios;
    for (const fs::path& p : files) {
        scenarios.push_back(load_scenario(p));
        manifest.inputs.push_back(p.string());
    }
    const EditConfig cfg = load_config_or_default(config_path);
    manifest.config_hash = tools::config_hash(cfg);
    timer.record("load");

    tools::PipelineOptions opts;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.randseg_n = randseg_n;
    opts.optimizer = solver_name == "exact" ? SolveMode::exact_dp : SolveMode::paper_dp;
    opts.methods = methods;
    const tools::PipelineResult result = tools::run_pipeline(scenarios, cfg, opts);
    timer.record("cells");

    fs::create_directories(out_dir);
    const std::size_t n_methods = result.methods.size();
    for (std::size_t si = 0; si < scenarios.size(); ++si) {
        for (std::size_t mi = 0; mi < n_methods; ++mi) {
            const tools::PipelineCell& cell = result.cells[si * n_methods + mi];
            if (!cell.ok) continue;
            std::string stem = files[si].stem().string() + "." + cell.method;
            std::replace(stem.begin(), stem.end(), '(', '_');
            std::replace(stem.begin(), stem.end(), ')', '_');
            save_edl(cell.edl, fs::path(out_dir) / (stem + ".edl.json"));
            write_text_file(fs::path(out_dir) / (stem + ".report.json"),
                            canonical_json(tools::report_to_json(cell.report)));
            manifest.outputs.push_back((fs::path(out_dir) / (stem + ".edl.json")).string());
        }
    }

    const std::string table = format == "csv" ? render_comparison_csv(result.aggregate)
                                              : render_comparison_text(result.aggregate);
    const fs::path table_path =
        fs::path(out_dir) / (format == "csv" ? "comparison.csv" : "comparison.txt");
    write_text_file(table_path, table);
    manifest.outputs.push_back(table_path.string());
    timer.record("save");

    tools::write_manifest(manifest, fs::path(out_dir) / "pipeline");
    std::cout << table;

    for (const tools::PipelineCell& cell : result.cells)
        if (!cell.ok)
            std::cerr << "cell failed: " << cell.scenario << " / " << cell.method << ": "
                      << cell.error << "\n";
    return result.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-camera lecture editing toolkit"};
    app.set_version_flag("--version", std::string("lecedit ") + kVersion);
    app.require_subcommand(1);

    // detect
    auto* detect = app.add_subcommand("detect", "regenerate indicators from feature streams");
    std::string d_scenario, d_out;
    DetectorParams d_params;
    double d_drop_threshold = 0.0;
    detect->add_option("--scenario", d_scenario, "scenario JSON with feature streams")
        ->required();
    detect->add_option("--out", d_out, "output scenario path")->required();
    detect->add_option("--ar-window", d_params.ar_window, "autoregression window");
    detect->add_option("--ar-threshold", d_params.ar_threshold, "residual multiplier");
    detect->add_option("--entropy-bins", d_params.entropy_bins, "orientation bins");
    detect->add_option("--drop-window", d_params.drop_window, "score window length");
    detect->add_option("--drop-threshold", d_drop_threshold,
                       "absolute drop threshold (default: 0.5 * std of the series)");
    detect->add_option("--count-min", d_params.count_min, "person count trigger");
    detect->add_option("--position-low", d_params.position_low, "stage band lower bound");
    detect->add_option("--position-high", d_params.position_high, "stage band upper bound");
    detect->add_option("--prob-threshold", d_params.prob_threshold, "probability cutoff");

    // score
    auto* score = app.add_subcommand("score", "write the semantic score matrix as CSV");
    std::string s_scenario, s_config, s_out;
    score->add_option("--scenario", s_scenario, "scenario JSON")->required();
    score->add_option("--config", s_config, "config JSON (default: built-in)");
    score->add_option("--out", s_out, "output CSV path")->required();

    // edit
    auto* edit = app.add_subcommand("edit", "solve for a camera sequence and write an EDL");
    std::string e_scenario, e_config, e_out, e_mode = "offline", e_solver = "paper";
    int e_look_ahead = 0, e_l_cap = 0;
    edit->add_option("--scenario", e_scenario, "scenario JSON")->required();
    edit->add_option("--config", e_config, "config JSON (default: built-in)");
    edit->add_option("--mode", e_mode, "editing mode")
        ->check(CLI::IsMember({"online", "lookahead", "offline"}));
    edit->add_option("--look-ahead", e_look_ahead, "look-ahead instances for lookahead mode");
    edit->add_option("--solver", e_solver, "dynamic program variant")
        ->check(CLI::IsMember({"paper", "exact"}));
    edit->add_option("--l-cap", e_l_cap, "run-length cap for the exact solver");
    edit->add_option("--out", e_out, "output EDL path")->required();

    // baseline
    auto* baseline = app.add_subcommand("baseline", "run a reference editor");
    std::string b_method, b_scenario, b_config, b_params, b_out;
    std::uint64_t b_seed = 1;
    baseline->add_option("--method", b_method, "baseline method")
        ->required()
        ->check(CLI::IsMember({"randseg", "ranking", "fsm"}));
    baseline->add_option("--scenario", b_scenario, "scenario JSON")->required();
    baseline->add_option("--config", b_config, "config JSON (default: built-in)");
    baseline->add_option("--params", b_params, "baseline params JSON");
    baseline->add_option("--seed", b_seed, "random seed");
    baseline->add_option("--out", b_out, "output EDL path")->required();

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "compute production statistics of an EDL");
    std::string v_edl, v_scenario, v_config, v_name, v_out, v_format = "json", v_svg;
    evaluate->add_option("--edl", v_edl, "EDL JSON")->required();
    evaluate->add_option("--scenario", v_scenario, "scenario JSON")->required();
    evaluate->add_option("--config", v_config, "config JSON (default: built-in)");
    evaluate->add_option("--name", v_name, "method name recorded in the report");
    evaluate->add_option("--out", v_out, "output report path")->required();
    evaluate->add_option("--format", v_format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    evaluate->add_option("--svg", v_svg, "also write a selection-timeline SVG");

    // compare
    auto* compare = app.add_subcommand("compare", "tabulate report files side by side");
    std::vector<std::string> c_reports;
    std::string c_out, c_format = "text";
    compare->add_option("--reports", c_reports, "report JSON files")->required()
        ->expected(-1);
    compare->add_option("--out", c_out, "output table path")->required();
    compare->add_option("--format", c_format, "table format")
        ->check(CLI::IsMember({"text", "csv"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "generate synthetic scenarios");
    std::string g_script, g_out, g_features = "full";
    bool g_suite = false;
    std::uint64_t g_seed = 1;
    simulate->add_option("--script", g_script, "event script JSON");
    simulate->add_flag("--suite", g_suite, "emit the 10-scenario benchmark suite");
    simulate->add_option("--seed", g_seed, "root seed for --suite");
    simulate->add_option("--features", g_features, "feature synthesis")
        ->check(CLI::IsMember({"full", "none"}));
    simulate->add_option("--out", g_out, "output file (script) or directory (suite)")
        ->required();

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "benchmark every method over a suite");
    std::string p_dir, p_config, p_out, p_format = "text", p_solver = "paper";
    std::uint64_t p_seed = 1;
    int p_jobs = 1, p_randseg = 30;
    pipeline->add_option("--scenarios", p_dir, "directory of scenario JSON files")->required();
    pipeline->add_option("--config", p_config, "config JSON (default: built-in)");
    pipeline->add_option("--seed", p_seed, "root seed for the randomized methods");
    pipeline->add_option("--out", p_out, "output directory")->required();
    pipeline->add_option("--format", p_format, "comparison table format")
        ->check(CLI::IsMember({"text", "csv"}));
    pipeline->add_option("--jobs", p_jobs, "concurrent (scenario, method) cells");
    pipeline->add_option("--solver", p_solver, "solver behind the Optim rows")
        ->check(CLI::IsMember({"paper", "exact"}));
    pipeline->add_option("--randseg-n", p_randseg, "segment length for Randseg");
    std::vector<std::string> p_methods;
    pipeline->add_option("--methods", p_methods,
                         "subset of rows to run, e.g. \"Exact(inf),Optim(20)\"")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect->parsed()) {
            if (detect->count("--drop-threshold")) d_params.drop_threshold = d_drop_threshold;
            return run_detect(d_scenario, d_out, d_params);
        }
        if (score->parsed()) return run_score(s_scenario, s_config, s_out);
        if (edit->parsed())
            return run_edit(e_scenario, e_config, e_mode, e_look_ahead, e_solver, e_l_cap, e_out);
        if (baseline->parsed())
            return run_baseline(b_method, b_scenario, b_config, b_params, b_seed, b_out);
        if (evaluate->parsed())
            return run_evaluate(v_edl, v_scenario, v_config, v_name, v_out, v_format, v_svg);
        if (compare->parsed()) return run_compare(c_reports, c_out, c_format);
        if (simulate->parsed()) {
            if (!g_suite && g_script.empty()) {
                std::cerr << "simulate: pass --script FILE or --suite\n";
                return 2;
            }
            return run_simulate(g_script, g_suite, g_seed, g_out, g_features);
        }
        if (pipeline->parsed())
            return run_pipeline_cmd(p_dir, p_config, p_seed, p_out, p_format, p_jobs, p_solver,
                                    p_randseg, p_methods);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

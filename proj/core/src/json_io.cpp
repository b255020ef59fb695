// SPDX-License-Identifier: Apache-2.0
#include "lecedit/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lecedit/errors.hpp"

namespace lecedit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& ctx, const std::string& what) {
    throw ParseError(ctx + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) fail(ctx, std::string("missing field '") + key + "'");
    return *it;
}

double require_number(const json& j, const char* key, const std::string& ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_number()) fail(ctx, std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

int require_int(const json& j, const char* key, const std::string& ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_number_integer()) fail(ctx, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string require_string(const json& j, const char* key, const std::string& ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_string()) fail(ctx, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

void require_object(const json& j, const std::string& ctx) {
    if (!j.is_object()) fail(ctx, "expected an object");
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& ctx) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (item.key() == a) { known = true; break; }
        if (!known) fail(ctx, "unknown field '" + item.key() + "'");
    }
}

ShotKind parse_kind(const std::string& code, const std::string& ctx) {
    auto k = shot_kind_from_string(code);
    if (!k) fail(ctx, "unknown shot kind '" + code + "'");
    return *k;
}

json grid_to_json(const FrameGrid& g) {
    json rows = json::array();
    for (int r = 0; r < g.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < g.cols; ++c) {
            json cell = json::array();
            for (int ch = 0; ch < g.channels; ++ch) cell.push_back(g.at(r, c, ch));
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

FrameGrid grid_from_json(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty()) fail(ctx, "frame grid must be a non-empty array of rows");
    FrameGrid g;
    g.rows = static_cast<int>(j.size());
    const json& row0 = j[0];
    if (!row0.is_array() || row0.empty()) fail(ctx, "frame rows must be non-empty arrays");
    g.cols = static_cast<int>(row0.size());
    const json& cell0 = row0[0];
    if (!cell0.is_array() || cell0.empty()) fail(ctx, "frame cells must be channel arrays");
    g.channels = static_cast<int>(cell0.size());
    g.values.reserve(static_cast<std::size_t>(g.rows) * g.cols * g.channels);
    for (const json& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != g.cols)
            fail(ctx, "ragged frame rows");
        for (const json& cell : row) {
            if (!cell.is_array() || static_cast<int>(cell.size()) != g.channels)
                fail(ctx, "ragged frame cells");
            for (const json& v : cell) {
                if (!v.is_number()) fail(ctx, "frame values must be numbers");
                g.values.push_back(v.get<double>());
            }
        }
    }
    return g;
}

json flow_to_json(const FlowField& f) {
    json rows = json::array();
    for (int r = 0; r < f.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < f.cols; ++c) row.push_back(json::array({f.u_at(r, c), f.v_at(r, c)}));
        rows.push_back(std::move(row));
    }
    return rows;
}

FlowField flow_from_json(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty()) fail(ctx, "flow field must be a non-empty array of rows");
    FlowField f;
    f.rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) fail(ctx, "flow rows must be non-empty arrays");
    f.cols = static_cast<int>(j[0].size());
    f.u.reserve(static_cast<std::size_t>(f.rows) * f.cols);
    f.v.reserve(f.u.capacity());
    for (const json& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != f.cols) fail(ctx, "ragged flow rows");
        for (const json& cell : row) {
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
                fail(ctx, "flow cells must be [u, v] number pairs");
            f.u.push_back(cell[0].get<double>());
            f.v.push_back(cell[1].get<double>());
        }
    }
    return f;
}

json kind_scores_to_json(const std::array<double, kShotKindCount>& a) {
    json j = json::object();
    for (ShotKind k : all_shot_kinds) j[std::string(to_string(k))] = a[index_of(k)];
    return j;
}

std::array<double, kShotKindCount> kind_scores_from_json(const json& j, const std::string& ctx) {
    require_object(j, ctx);
    std::array<double, kShotKindCount> out{};
    for (ShotKind k : all_shot_kinds)
        out[index_of(k)] = require_number(j, std::string(to_string(k)).c_str(), ctx);
    for (const auto& item : j.items())
        if (!shot_kind_from_string(item.key())) fail(ctx, "unknown shot kind '" + item.key() + "'");
    return out;
}

}  // namespace

json scenario_to_json(const Scenario& s) {
    json j;
    j["instances_per_second"] = s.instances_per_second;
    j["T"] = s.T;
    json cams = json::array();
    for (const Camera& cam : s.cameras) {
        json jc;
        jc["id"] = cam.id;
        jc["kind"] = std::string(to_string(cam.kind));
        jc["indicator"] = cam.indicator;
        if (!cam.features.empty()) {
            json jf = json::object();
            const FeatureStreams& f = cam.features;
            if (!f.frames.empty()) {
                json arr = json::array();
                for (const FrameGrid& g : f.frames) arr.push_back(grid_to_json(g));
                jf["frames"] = std::move(arr);
            }
            if (!f.flow.empty()) {
                json arr = json::array();
                for (const FlowField& fl : f.flow) arr.push_back(flow_to_json(fl));
                jf["flow"] = std::move(arr);
            }
            if (!f.scalar.empty()) jf["scalar"] = f.scalar;
            if (!f.counts.empty()) jf["counts"] = f.counts;
            if (!f.positions.empty()) jf["positions"] = f.positions;
            jc["features"] = std::move(jf);
        }
        cams.push_back(std::move(jc));
    }
    j["cameras"] = std::move(cams);
    return j;
}

Scenario scenario_from_json(const json& j) {
    const std::string ctx = "scenario";
    require_object(j, ctx);
    reject_unknown(j, {"instances_per_second", "T", "cameras"}, ctx);

    Scenario s;
    s.instances_per_second = require_number(j, "instances_per_second", ctx);
    s.T = require_int(j, "T", ctx);
    const json& cams = require(j, "cameras", ctx);
    if (!cams.is_array()) fail(ctx, "field 'cameras' must be an array");

    for (std::size_t i = 0; i < cams.size(); ++i) {
        const std::string cctx = ctx + ".cameras[" + std::to_string(i) + "]";
        const json& jc = cams[i];
        require_object(jc, cctx);
        reject_unknown(jc, {"id", "kind", "indicator", "features"}, cctx);

        Camera cam;
        cam.id = require_string(jc, "id", cctx);
        cam.kind = parse_kind(require_string(jc, "kind", cctx), cctx);
        const json& ind = require(jc, "indicator", cctx);
        if (!ind.is_array()) fail(cctx, "field 'indicator' must be an array");
        cam.indicator.reserve(ind.size());
        for (std::size_t t = 0; t < ind.size(); ++t) {
            if (!ind[t].is_number_integer())
                fail(cctx + ".indicator[" + std::to_string(t) + "]", "expected an integer");
            cam.indicator.push_back(ind[t].get<int>());
        }

        if (auto it = jc.find("features"); it != jc.end()) {
            const std::string fctx = cctx + ".features";
            require_object(*it, fctx);
            reject_unknown(*it, {"frames", "flow", "scalar", "counts", "positions"}, fctx);
            if (auto f = it->find("frames"); f != it->end()) {
                if (!f->is_array()) fail(fctx, "'frames' must be an array");
                for (std::size_t t = 0; t < f->size(); ++t)
                    cam.features.frames.push_back(
                        grid_from_json((*f)[t], fctx + ".frames[" + std::to_string(t) + "]"));
            }
            if (auto f = it->find("flow"); f != it->end()) {
                if (!f->is_array()) fail(fctx, "'flow' must be an array");
                for (std::size_t t = 0; t < f->size(); ++t)
                    cam.features.flow.push_back(
                        flow_from_json((*f)[t], fctx + ".flow[" + std::to_string(t) + "]"));
            }
            if (auto f = it->find("scalar"); f != it->end()) {
                if (!f->is_array()) fail(fctx, "'scalar' must be an array");
                for (const json& v : *f) {
                    if (!v.is_number()) fail(fctx, "'scalar' entries must be numbers");
                    cam.features.scalar.push_back(v.get<double>());
                }
            }
            if (auto f = it->find("counts"); f != it->end()) {
                if (!f->is_array()) fail(fctx, "'counts' must be an array");
                for (const json& v : *f) {
                    if (!v.is_number_integer()) fail(fctx, "'counts' entries must be integers");
                    cam.features.counts.push_back(v.get<int>());
                }
            }
            if (auto f = it->find("positions"); f != it->end()) {
                if (!f->is_array()) fail(fctx, "'positions' must be an array");
                for (const json& v : *f) {
                    if (!v.is_number()) fail(fctx, "'positions' entries must be numbers");
                    cam.features.positions.push_back(v.get<double>());
                }
            }
        }
        s.cameras.push_back(std::move(cam));
    }
    return s;
}

json config_to_json(const EditConfig& cfg) {
    json j;
    j["weights"] = kind_scores_to_json(cfg.weights);
    j["defaults"] = kind_scores_to_json(cfg.defaults);
    j["epsilon"] = cfg.epsilon;
    j["c_sw"] = cfg.c_sw;
    j["c_broll"] = cfg.c_broll;
    j["l_min"] = cfg.l_min;
    j["l_max"] = cfg.l_max;
    j["l_mean"] = cfg.l_mean;

    json broll = json::array();
    for (ShotKind k : all_shot_kinds)
        if (cfg.in_broll_set(k)) broll.push_back(std::string(to_string(k)));
    j["broll_set"] = std::move(broll);

    json viol = json::object();
    for (ShotKind from : all_shot_kinds) {
        json targets = json::array();
        for (ShotKind to : all_shot_kinds)
            if (cfg.violates(from, to)) targets.push_back(std::string(to_string(to)));
        viol[std::string(to_string(from))] = std::move(targets);
    }
    j["violation_sets"] = std::move(viol);

    j["lambda_e"] = cfg.lambda_e;
    j["lambda_sw"] = cfg.lambda_sw;
    j["lambda_b"] = cfg.lambda_b;
    j["look_ahead"] = cfg.look_ahead.infinite ? json("infinite") : json(cfg.look_ahead.value);
    j["initial_camera"] = cfg.initial.camera_id.empty() ? "argmax" : cfg.initial.camera_id;
    j["initial_run_length"] = cfg.initial.run_length;
    j["tie_break"] = cfg.tie_break;
    return j;
}

EditConfig config_from_json(const json& j) {
    const std::string ctx = "config";
    require_object(j, ctx);
    reject_unknown(j,
                   {"weights", "defaults", "epsilon", "c_sw", "c_broll", "l_min", "l_max",
                    "l_mean", "broll_set", "violation_sets", "lambda_e", "lambda_sw", "lambda_b",
                    "look_ahead", "initial_camera", "initial_run_length", "tie_break"},
                   ctx);

    EditConfig cfg;
    cfg.weights = kind_scores_from_json(require(j, "weights", ctx), ctx + ".weights");
    cfg.defaults = kind_scores_from_json(require(j, "defaults", ctx), ctx + ".defaults");
    cfg.epsilon = require_number(j, "epsilon", ctx);
    cfg.c_sw = require_number(j, "c_sw", ctx);
    cfg.c_broll = require_number(j, "c_broll", ctx);
    cfg.l_min = require_number(j, "l_min", ctx);
    cfg.l_max = require_number(j, "l_max", ctx);
    cfg.l_mean = require_number(j, "l_mean", ctx);

    const json& broll = require(j, "broll_set", ctx);
    if (!broll.is_array()) fail(ctx, "'broll_set' must be an array of shot kinds");
    cfg.broll_set.fill(false);
    for (const json& v : broll) {
        if (!v.is_string()) fail(ctx + ".broll_set", "entries must be shot-kind strings");
        cfg.broll_set[index_of(parse_kind(v.get<std::string>(), ctx + ".broll_set"))] = true;
    }

    const json& viol = require(j, "violation_sets", ctx);
    require_object(viol, ctx + ".violation_sets");
    for (auto& row : cfg.violations) row.fill(false);
    for (const auto& item : viol.items()) {
        const ShotKind from = parse_kind(item.key(), ctx + ".violation_sets");
        if (!item.value().is_array())
            fail(ctx + ".violation_sets." + item.key(), "expected an array of shot kinds");
        for (const json& v : item.value()) {
            if (!v.is_string())
                fail(ctx + ".violation_sets." + item.key(), "entries must be shot-kind strings");
            const ShotKind to =
                parse_kind(v.get<std::string>(), ctx + ".violation_sets." + item.key());
            cfg.violations[index_of(from)][index_of(to)] = true;
        }
    }

    cfg.lambda_e = require_number(j, "lambda_e", ctx);
    cfg.lambda_sw = require_number(j, "lambda_sw", ctx);
    cfg.lambda_b = require_number(j, "lambda_b", ctx);

    const json& la = require(j, "look_ahead", ctx);
    if (la.is_string()) {
        if (la.get<std::string>() != "infinite")
            fail(ctx, "'look_ahead' must be a positive integer or \"infinite\"");
        cfg.look_ahead = LookAhead::inf();
    } else if (la.is_number_integer()) {
        cfg.look_ahead = LookAhead::of(la.get<int>());
    } else {
        fail(ctx, "'look_ahead' must be a positive integer or \"infinite\"");
    }

    const std::string init_cam = require_string(j, "initial_camera", ctx);
    cfg.initial.camera_id = (init_cam == "argmax") ? "" : init_cam;
    cfg.initial.run_length = require_int(j, "initial_run_length", ctx);
    cfg.tie_break = require_string(j, "tie_break", ctx);
    return cfg;
}

json edl_to_json(const EditDecisionList& edl) {
    json segs = json::array();
    for (const Segment& s : edl.segments) {
        json js;
        js["camera"] = s.camera;
        js["start"] = s.start;
        js["end"] = s.end;
        segs.push_back(std::move(js));
    }
    return json{{"segments", std::move(segs)}};
}

EditDecisionList edl_from_json(const json& j) {
    const std::string ctx = "edl";
    require_object(j, ctx);
    reject_unknown(j, {"segments"}, ctx);
    const json& segs = require(j, "segments", ctx);
    if (!segs.is_array()) fail(ctx, "'segments' must be an array");

    EditDecisionList edl;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const std::string sctx = ctx + ".segments[" + std::to_string(i) + "]";
        require_object(segs[i], sctx);
        reject_unknown(segs[i], {"camera", "start", "end"}, sctx);
        Segment s;
        s.camera = require_string(segs[i], "camera", sctx);
        s.start = require_int(segs[i], "start", sctx);
        s.end = require_int(segs[i], "end", sctx);
        edl.segments.push_back(std::move(s));
    }
    return edl;
}

json script_to_json(const EventScript& script) {
    json events = json::array();
    for (const ScriptEvent& e : script.events) {
        json je;
        je["kind"] = std::string(to_string(e.kind));
        je["start"] = e.start;
        je["duration"] = e.duration;
        events.push_back(std::move(je));
    }
    json noise;
    noise["frames"] = script.noise.frames;
    noise["flow"] = script.noise.flow;
    noise["scalar"] = script.noise.scalar;
    noise["counts"] = script.noise.counts;
    noise["positions"] = script.noise.positions;

    json j;
    j["T"] = script.T;
    j["seed"] = script.seed;
    j["noise"] = std::move(noise);
    j["events"] = std::move(events);
    return j;
}

EventScript script_from_json(const json& j) {
    const std::string ctx = "script";
    require_object(j, ctx);
    reject_unknown(j, {"T", "seed", "noise", "events"}, ctx);

    EventScript script;
    script.T = require_int(j, "T", ctx);
    const json& seed = require(j, "seed", ctx);
    if (!seed.is_number_unsigned() && !seed.is_number_integer())
        fail(ctx, "field 'seed' must be an integer");
    script.seed = seed.get<std::uint64_t>();

    const json& noise = require(j, "noise", ctx);
    require_object(noise, ctx + ".noise");
    reject_unknown(noise, {"frames", "flow", "scalar", "counts", "positions"}, ctx + ".noise");
    script.noise.frames = require_number(noise, "frames", ctx + ".noise");
    script.noise.flow = require_number(noise, "flow", ctx + ".noise");
    script.noise.scalar = require_number(noise, "scalar", ctx + ".noise");
    script.noise.counts = require_number(noise, "counts", ctx + ".noise");
    script.noise.positions = require_number(noise, "positions", ctx + ".noise");

    const json& events = require(j, "events", ctx);
    if (!events.is_array()) fail(ctx, "'events' must be an array");
    for (std::size_t i = 0; i < events.size(); ++i) {
        const std::string ectx = ctx + ".events[" + std::to_string(i) + "]";
        require_object(events[i], ectx);
        reject_unknown(events[i], {"kind", "start", "duration"}, ectx);
        ScriptEvent e;
        const std::string kind = require_string(events[i], "kind", ectx);
        const auto k = event_kind_from_string(kind);
        if (!k) fail(ectx, "unknown event kind '" + kind + "'");
        e.kind = *k;
        e.start = require_int(events[i], "start", ectx);
        e.duration = require_int(events[i], "duration", ectx);
        script.events.push_back(e);
    }
    return script;
}

std::string canonical_json(const json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw ParseError(path.string() + ": write failed");
}

namespace {

json parse_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace

Scenario load_scenario(const std::filesystem::path& path) {
    Scenario s;
    try {
        s = scenario_from_json(parse_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    const auto violations = validate_scenario(s);
    if (!violations.empty()) {
        std::string msg = path.string() + ": scenario invalid:";
        for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
            const Violation& v = violations[i];
            msg += "\n  ";
            if (!v.camera.empty()) msg += "camera '" + v.camera + "' ";
            if (v.t >= 0) msg += "t=" + std::to_string(v.t) + " ";
            msg += v.message;
        }
        if (violations.size() > 5)
            msg += "\n  (+" + std::to_string(violations.size() - 5) + " more)";
        throw ValidationError(msg);
    }
    return s;
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
    write_text_file(path, canonical_json(scenario_to_json(s)));
}

EditConfig load_config(const std::filesystem::path& path) {
    EditConfig cfg;
    try {
        cfg = config_from_json(parse_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    const auto problems = validate_config(cfg);
    if (!problems.empty()) {
        std::string msg = path.string() + ": config invalid:";
        for (const std::string& p : problems) msg += "\n  " + p;
        throw ValidationError(msg);
    }
    return cfg;
}

void save_config(const EditConfig& cfg, const std::filesystem::path& path) {
    write_text_file(path, canonical_json(config_to_json(cfg)));
}

EditDecisionList load_edl(const std::filesystem::path& path) {
    EditDecisionList edl;
    try {
        edl = edl_from_json(parse_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    const auto problems = validate_edl(edl, -1);
    if (!problems.empty()) {
        std::string msg = path.string() + ": EDL invalid:";
        for (const std::string& p : problems) msg += "\n  " + p;
        throw ValidationError(msg);
    }
    return edl;
}

void save_edl(const EditDecisionList& edl, const std::filesystem::path& path) {
    write_text_file(path, canonical_json(edl_to_json(edl)));
}

EventScript load_script(const std::filesystem::path& path) {
    EventScript script;
    try {
        script = script_from_json(parse_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    const auto problems = validate_script(script);
    if (!problems.empty()) {
        std::string msg = path.string() + ": script invalid:";
        for (const std::string& p : problems) msg += "\n  " + p;
        throw ValidationError(msg);
    }
    return script;
}

void save_script(const EventScript& script, const std::filesystem::path& path) {
    write_text_file(path, canonical_json(script_to_json(script)));
}

std::uint64_t fnv1a_hash(std::span<const char> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

}  // namespace lecedit

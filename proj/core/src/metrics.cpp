// SPDX-License-Identifier: Apache-2.0
#include "lecedit/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "lecedit/solver.hpp"

namespace lecedit {
namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                    "#59a14f", "#edc948", "#b07aa1", "#9c755f"};

}  // namespace

MetricsReport compute_metrics(const EditDecisionList& edl, const ScoreMatrix& scores,
                              const TransitionMatrix& t_mat, const EditConfig& cfg,
                              const std::string& method) {
    const int T = scores.horizon();
    const std::vector<int> seq = sequence_from_edl(edl, scores.camera_ids, T);

    MetricsReport rep;
    rep.method = method;
    rep.timeline = T;
    rep.n_sw = edl.cut_count();
    rep.l_avg = static_cast<double>(T) / (rep.n_sw + 1);

    const InitState init = initial_state(scores, cfg);
    rep.r_avg = rescore(seq, scores, t_mat, cfg, init, 0) / T;

    int argmax_hits = 0;
    for (int t = 0; t < T; ++t) {
        int best = 0;
        for (int c = 1; c < scores.camera_count(); ++c)
            if (scores.at(c, t) > scores.at(best, t)) best = c;
        if (best == seq[t]) ++argmax_hits;
    }
    rep.r_max = static_cast<double>(argmax_hits) / T;

    int favorable = 0;
    const int cuts = rep.n_sw;
    for (std::size_t i = 1; i < edl.segments.size(); ++i) {
        const int from = static_cast<int>(
            std::find(scores.camera_ids.begin(), scores.camera_ids.end(),
                      edl.segments[i - 1].camera) -
            scores.camera_ids.begin());
        const int to = static_cast<int>(
            std::find(scores.camera_ids.begin(), scores.camera_ids.end(),
                      edl.segments[i].camera) -
            scores.camera_ids.begin());
        if (t_mat.at(scores.kinds[from], scores.kinds[to]) > 0.0) ++favorable;
    }
    rep.r_trans = cuts == 0 ? 1.0 : static_cast<double>(favorable) / cuts;
    return rep;
}

ComparisonRow ComparisonRow::from_report(const MetricsReport& r) {
    return ComparisonRow{r.method, r.r_avg, r.r_max, r.r_trans,
                         static_cast<double>(r.n_sw), r.l_avg, ""};
}

namespace {

struct BestFlags {
    std::vector<bool> r_avg, r_max, r_trans;
};

BestFlags best_of(std::span<const ComparisonRow> rows) {
    BestFlags best{std::vector<bool>(rows.size(), false), std::vector<bool>(rows.size(), false),
                   std::vector<bool>(rows.size(), false)};
    auto mark = [&rows](auto member, std::vector<bool>& flags) {
        double top = 0.0;
        bool any = false;
        for (const ComparisonRow& r : rows)
            if (r.status.empty() && (!any || r.*member > top)) {
                top = r.*member;
                any = true;
            }
        if (!any) return;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].status.empty() && rows[i].*member == top) flags[i] = true;
    };
    mark(&ComparisonRow::r_avg, best.r_avg);
    mark(&ComparisonRow::r_max, best.r_max);
    mark(&ComparisonRow::r_trans, best.r_trans);
    return best;
}

}  // namespace

std::string render_comparison_text(std::span<const ComparisonRow> rows) {
    const BestFlags best = best_of(rows);

    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"method", "R_avg", "r_max", "r_trans", "n_sw", "L_avg"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ComparisonRow& r = rows[i];
        if (!r.status.empty()) {
            cells.push_back({r.method, "[" + r.status + "]", "", "", "", ""});
            continue;
        }
        cells.push_back({r.method, fixed(r.r_avg, 4) + (best.r_avg[i] ? "*" : ""),
                         fixed(r.r_max, 4) + (best.r_max[i] ? "*" : ""),
                         fixed(r.r_trans, 4) + (best.r_trans[i] ? "*" : ""), fixed(r.n_sw, 2),
                         fixed(r.l_avg, 2)});
    }

    std::array<std::size_t, 6> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());

    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < 6; ++c) {
            std::string cell = row[c];
            cell.resize(width[c] + (c + 1 < 6 ? 2 : 0), ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_comparison_csv(std::span<const ComparisonRow> rows) {
    const BestFlags best = best_of(rows);
    std::ostringstream out;
    out << "method,R_avg,r_max,r_trans,n_sw,L_avg,best,status\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ComparisonRow& r = rows[i];
        if (!r.status.empty()) {
            out << r.method << ",,,,,,," << r.status << '\n';
            continue;
        }
        std::string wins;
        if (best.r_avg[i]) wins += "R_avg";
        if (best.r_max[i]) wins += (wins.empty() ? "" : ";") + std::string("r_max");
        if (best.r_trans[i]) wins += (wins.empty() ? "" : ";") + std::string("r_trans");
        out << r.method << ',' << fixed(r.r_avg, 6) << ',' << fixed(r.r_max, 6) << ','
            << fixed(r.r_trans, 6) << ',' << fixed(r.n_sw, 6) << ',' << fixed(r.l_avg, 6) << ','
            << wins << ",ok\n";
    }
    return out.str();
}

std::string render_timeline_svg(const EditDecisionList& edl,
                                std::span<const std::string> camera_ids, int T) {
    if (T < 1) throw std::invalid_argument("render_timeline_svg: T must be >= 1");
    const int lane_h = 24, left = 64, top = 12, plot_w = 800, bottom = 28;
    const int C = static_cast<int>(camera_ids.size());
    const int height = top + C * lane_h + bottom;
    const double scale = static_cast<double>(plot_w) / T;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + plot_w + 16
        << "\" height=\"" << height << "\">\n";
    for (int c = 0; c < C; ++c) {
        const int y = top + c * lane_h;
        svg << "  <text x=\"4\" y=\"" << y + lane_h - 8
            << "\" font-family=\"monospace\" font-size=\"12\">" << camera_ids[c] << "</text>\n";
        svg << "  <line x1=\"" << left << "\" y1=\"" << y + lane_h << "\" x2=\"" << left + plot_w
            << "\" y2=\"" << y + lane_h << "\" stroke=\"#dddddd\"/>\n";
    }
    for (const Segment& seg : edl.segments) {
        int lane = -1;
        for (int c = 0; c < C; ++c)
            if (camera_ids[c] == seg.camera) { lane = c; break; }
        if (lane < 0) throw std::invalid_argument("render_timeline_svg: unknown camera '" +
                                                  seg.camera + "'");
        svg << "  <rect x=\"" << fixed(left + seg.start * scale, 2) << "\" y=\""
            << top + lane * lane_h + 3 << "\" width=\"" << fixed(seg.length() * scale, 2)
            << "\" height=\"" << lane_h - 6 << "\" fill=\"" << kPalette[lane % 8] << "\"/>\n";
    }
    svg << "  <text x=\"" << left << "\" y=\"" << height - 8
        << "\" font-family=\"monospace\" font-size=\"12\">t = 0 .. " << T << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace lecedit

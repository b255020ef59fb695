// SPDX-License-Identifier: Apache-2.0
#include "lecedit/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lecedit {
namespace {

void check_positive(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("detector params: ") + what);
}

// Central-difference gradient magnitude of one channel, replicated borders.
std::vector<double> gradient_magnitude(const double* data, int rows, int cols, int stride) {
    std::vector<double> mag(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        const int rp = std::min(r + 1, rows - 1), rm = std::max(r - 1, 0);
        for (int c = 0; c < cols; ++c) {
            const int cp = std::min(c + 1, cols - 1), cm = std::max(c - 1, 0);
            const double gx = (data[(r * cols + cp) * stride] - data[(r * cols + cm) * stride]) / 2.0;
            const double gy = (data[(rp * cols + c) * stride] - data[(rm * cols + c) * stride]) / 2.0;
            mag[static_cast<std::size_t>(r) * cols + c] = std::hypot(gx, gy);
        }
    }
    return mag;
}

double mean_of(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

double grad_diff_score(const FrameGrid& a, const FrameGrid& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("grad_diff_score: frame shapes differ");
    if (a.rows < 2 || a.cols < 2)
        throw std::invalid_argument("grad_diff_score: grid must be at least 2x2");
    if (a.channels != 1 && a.channels != 3)
        throw std::invalid_argument("grad_diff_score: channels must be 1 or 3");

    double sum = 0.0;
    for (int ch = 0; ch < a.channels; ++ch) {
        const auto ga = gradient_magnitude(a.values.data() + ch, a.rows, a.cols, a.channels);
        const auto gb = gradient_magnitude(b.values.data() + ch, b.rows, b.cols, b.channels);
        double sq = 0.0;
        for (std::size_t i = 0; i < ga.size(); ++i) {
            const double d = ga[i] - gb[i];
            sq += d * d;
        }
        sum += std::sqrt(sq);
    }
    return sum / a.channels;
}

std::vector<double> grad_diff_series(std::span<const FrameGrid> frames) {
    std::vector<double> out(frames.size(), 0.0);
    for (std::size_t t = 1; t < frames.size(); ++t)
        out[t] = grad_diff_score(frames[t - 1], frames[t]);
    return out;
}

std::vector<int> ar_anomaly_detect(std::span<const double> series, const DetectorParams& p) {
    const int tau = p.ar_window;
    check_positive(tau >= 4, "ar_window must be >= 4");
    check_positive(p.ar_threshold > 0.0, "ar_threshold must be > 0");
    const int T = static_cast<int>(series.size());
    if (T <= tau)
        throw std::invalid_argument("ar_anomaly_detect: series length " + std::to_string(T) +
                                    " must exceed ar_window " + std::to_string(tau));

    std::vector<int> out(series.size(), 0);
    const int n = tau - 2;  // training pairs per window
    for (int t = tau; t < T; ++t) {
        const double* w = series.data() + (t - tau);

        // Order-2 autoregression fit on the window, mean-centered so constant
        // and collinear windows stay well behaved; a vanishing ridge picks
        // the minimum-norm solution when the normal equations are singular.
        double ym = 0.0, m1 = 0.0, m2 = 0.0;
        for (int j = 2; j < tau; ++j) {
            ym += w[j];
            m1 += w[j - 1];
            m2 += w[j - 2];
        }
        ym /= n;
        m1 /= n;
        m2 /= n;

        double g00 = 0.0, g01 = 0.0, g11 = 0.0, v0 = 0.0, v1 = 0.0;
        for (int j = 2; j < tau; ++j) {
            const double z1 = w[j - 1] - m1, z2 = w[j - 2] - m2, yc = w[j] - ym;
            g00 += z1 * z1;
            g01 += z1 * z2;
            g11 += z2 * z2;
            v0 += z1 * yc;
            v1 += z2 * yc;
        }
        const double lam = 1e-9 * (1.0 + 0.5 * (g00 + g11));
        const double a00 = g00 + lam, a11 = g11 + lam;
        const double det = a00 * a11 - g01 * g01;
        const double a1 = (a11 * v0 - g01 * v1) / det;
        const double a2 = (-g01 * v0 + a00 * v1) / det;

        double resid_sq = 0.0;
        for (int j = 2; j < tau; ++j) {
            const double r = (w[j] - ym) - a1 * (w[j - 1] - m1) - a2 * (w[j - 2] - m2);
            resid_sq += r * r;
        }
        const double sigma = std::max(std::sqrt(resid_sq / n), p.sigma_floor);

        const double pred = ym + a1 * (series[t - 1] - m1) + a2 * (series[t - 2] - m2);
        if (std::abs(series[t] - pred) > p.ar_threshold * sigma) out[t] = 1;
    }
    return out;
}

double motion_entropy_score(const FlowField& flow, int bins) {
    if (flow.rows < 2 || flow.cols < 2)
        throw std::invalid_argument("motion_entropy_score: flow field must be at least 2x2");
    check_positive(bins >= 2, "entropy_bins must be >= 2");

    auto orientation_hist = [&](const std::vector<double>& ch) {
        std::vector<double> h(static_cast<std::size_t>(bins), 0.0);
        for (int r = 0; r < flow.rows; ++r) {
            const int rp = std::min(r + 1, flow.rows - 1), rm = std::max(r - 1, 0);
            for (int c = 0; c < flow.cols; ++c) {
                const int cp = std::min(c + 1, flow.cols - 1), cm = std::max(c - 1, 0);
                const double gx = (ch[r * flow.cols + cp] - ch[r * flow.cols + cm]) / 2.0;
                const double gy = (ch[rp * flow.cols + c] - ch[rm * flow.cols + c]) / 2.0;
                const double mag = std::hypot(gx, gy);
                double ang = std::atan2(gy, gx);  // unsigned orientation in [0, pi)
                if (ang < 0) ang += M_PI;
                if (ang >= M_PI) ang -= M_PI;
                int b = static_cast<int>(ang / M_PI * bins);
                if (b >= bins) b = bins - 1;
                h[b] += mag;
            }
        }
        return h;
    };

    auto softmax_entropy = [&](const std::vector<double>& h) {
        const double m = *std::max_element(h.begin(), h.end());
        double z = 0.0;
        for (double x : h) z += std::exp(x - m);
        double ent = 0.0;
        for (double x : h) {
            const double pr = std::exp(x - m) / z;
            if (pr > 0.0) ent -= pr * std::log(pr);
        }
        return ent;
    };

    return softmax_entropy(orientation_hist(flow.u)) + softmax_entropy(orientation_hist(flow.v));
}

std::vector<double> motion_entropy_series(std::span<const FlowField> flows, int bins) {
    std::vector<double> out(flows.size(), 0.0);
    for (std::size_t t = 0; t < flows.size(); ++t) out[t] = motion_entropy_score(flows[t], bins);
    return out;
}

std::vector<int> window_drop_detect(std::span<const double> scores, const DetectorParams& p) {
    const int w = p.drop_window;
    check_positive(w >= 1, "drop_window must be >= 1");
    const int T = static_cast<int>(scores.size());
    if (T < 2 * w)
        throw std::invalid_argument("window_drop_detect: series length " + std::to_string(T) +
                                    " must be >= 2 * drop_window " + std::to_string(2 * w));

    double delta;
    if (p.drop_threshold) {
        delta = *p.drop_threshold;
        check_positive(delta > 0.0, "drop_threshold must be > 0");
    } else {
        const double m = mean_of(scores);
        double var = 0.0;
        for (double x : scores) var += (x - m) * (x - m);
        delta = 0.5 * std::sqrt(var / T);
    }

    std::vector<int> out(scores.size(), 0);
    for (int t = 2 * w; t < T; ++t) {
        const double lead = mean_of(scores.subspan(t - 2 * w, w));
        const double trail = mean_of(scores.subspan(t - w, w + 1));
        if (lead - trail > delta) out[t] = 1;
    }
    return out;
}

std::vector<int> count_indicator(std::span<const int> counts, const DetectorParams& p) {
    check_positive(p.count_min >= 1, "count_min must be >= 1");
    std::vector<int> out(counts.size(), 0);
    for (std::size_t t = 0; t < counts.size(); ++t) out[t] = counts[t] > p.count_min ? 1 : 0;
    return out;
}

std::vector<int> position_indicator(std::span<const double> positions, const DetectorParams& p) {
    if (!(p.position_low <= p.position_high))
        throw std::invalid_argument("position bounds reversed");
    std::vector<int> out(positions.size(), 0);
    for (std::size_t t = 0; t < positions.size(); ++t)
        out[t] = (positions[t] < p.position_low || positions[t] > p.position_high) ? 1 : 0;
    return out;
}

std::vector<int> prob_indicator(std::span<const double> probs, const DetectorParams& p) {
    check_positive(p.prob_threshold > 0.0 && p.prob_threshold < 1.0,
                   "prob_threshold must be in (0, 1)");
    std::vector<int> out(probs.size(), 0);
    for (std::size_t t = 0; t < probs.size(); ++t) {
        if (!(probs[t] >= 0.0 && probs[t] <= 1.0))
            throw std::invalid_argument("prob_indicator: value at t=" + std::to_string(t) +
                                        " outside [0, 1]");
        out[t] = probs[t] > p.prob_threshold ? 1 : 0;
    }
    return out;
}

int refresh_indicators(Scenario& s, const DetectorParams& p) {
    int refreshed = 0;
    for (Camera& cam : s.cameras) {
        const FeatureStreams& f = cam.features;
        std::vector<int> ind;
        switch (cam.kind) {
            case ShotKind::LeftBlackboardCloseUp:
            case ShotKind::RightBlackboardCloseUp:
                // Writing-event probabilities arrive precomputed.
                if (!f.scalar.empty()) ind = prob_indicator(f.scalar, p);
                break;
            case ShotKind::SlideCloseUp:
                if (!f.frames.empty())
                    ind = ar_anomaly_detect(grad_diff_series(f.frames), p);
                else if (!f.scalar.empty())
                    ind = ar_anomaly_detect(f.scalar, p);
                break;
            case ShotKind::StudentLong:
                if (!f.flow.empty())
                    ind = window_drop_detect(motion_entropy_series(f.flow, p.entropy_bins), p);
                else if (!f.scalar.empty())
                    ind = window_drop_detect(f.scalar, p);
                break;
            case ShotKind::LeftMedium:
            case ShotKind::RightMedium:
                if (!f.counts.empty()) ind = count_indicator(f.counts, p);
                break;
            case ShotKind::OverviewLong:
                if (!f.positions.empty()) ind = position_indicator(f.positions, p);
                break;
        }
        if (!ind.empty()) {
            cam.indicator = std::move(ind);
            ++refreshed;
        }
    }
    return refreshed;
}

}  // namespace lecedit

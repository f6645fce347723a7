#include "mic.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ws::feat {

namespace {

// equal-frequency binning by value thresholds; ties never straddle a bin edge
std::vector<int> equal_frequency_bins(const std::vector<double>& v, int bins) {
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = v.size();
    std::vector<double> cuts(static_cast<std::size_t>(bins - 1));
    for (int i = 1; i < bins; ++i) {
        std::size_t pos = (static_cast<std::size_t>(i) * n) / static_cast<std::size_t>(bins);
        cuts[static_cast<std::size_t>(i - 1)] = sorted[pos == 0 ? 0 : pos - 1];
    }
    std::vector<int> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        int b = 0;
        for (double c : cuts)
            if (v[j] > c) ++b;
        out[j] = b;
    }
    return out;
}

double mutual_information_log2(const std::vector<int>& bx, const std::vector<int>& by, int cx,
                               int cy) {
    const std::size_t n = bx.size();
    // integer counts keep clean fractions exact (50/100 is 0.5 to the bit),
    // so perfect dependence scores exactly 1 after normalization
    std::vector<std::size_t> joint(static_cast<std::size_t>(cx * cy), 0);
    std::vector<std::size_t> px(static_cast<std::size_t>(cx), 0);
    std::vector<std::size_t> py(static_cast<std::size_t>(cy), 0);
    for (std::size_t i = 0; i < n; ++i) {
        ++joint[static_cast<std::size_t>(bx[i] * cy + by[i])];
        ++px[static_cast<std::size_t>(bx[i])];
        ++py[static_cast<std::size_t>(by[i])];
    }
    const double dn = static_cast<double>(n);
    double info = 0.0;
    for (int a = 0; a < cx; ++a) {
        for (int b = 0; b < cy; ++b) {
            const std::size_t c = joint[static_cast<std::size_t>(a * cy + b)];
            if (c == 0) continue;
            const double p = static_cast<double>(c) / dn;
            const double marg = (static_cast<double>(px[static_cast<std::size_t>(a)]) / dn) *
                                (static_cast<double>(py[static_cast<std::size_t>(b)]) / dn);
            info += p * std::log2(p / marg);
        }
    }
    return info;
}

} // namespace

mic_score mic(const std::vector<double>& x, const std::vector<double>& y, double b_exponent) {
    require(x.size() == y.size(), errc::invalid_argument, "mic: series length mismatch");
    const std::size_t n = x.size();
    require(n >= 10, errc::invalid_argument, "mic: need at least 10 samples");

    // 2x2 is always admitted so tiny samples still have a grid
    const int bound = std::max(4, static_cast<int>(std::floor(
                                      std::pow(static_cast<double>(n), b_exponent))));

    mic_score out;
    out.grid_bound = bound;
    for (int cx = 2; cx * 2 <= bound; ++cx) {
        auto bx = equal_frequency_bins(x, cx);
        for (int cy = 2; cx * cy <= bound; ++cy) {
            auto by = equal_frequency_bins(y, cy);
            double info = mutual_information_log2(bx, by, cx, cy);
            double norm = info / std::log2(static_cast<double>(std::min(cx, cy)));
            out.score = std::max(out.score, norm);
        }
    }
    out.score = std::clamp(out.score, 0.0, 1.0);
    return out;
}

std::vector<mic_score> select_top_k(
    const std::vector<std::pair<std::string, std::vector<double>>>& candidates,
    const std::vector<double>& target, std::size_t k, double b_exponent) {
    require(k <= candidates.size(), errc::invalid_argument, "select_top_k: k > candidate count");
    std::vector<mic_score> scores;
    scores.reserve(candidates.size());
    for (const auto& [name, series] : candidates) {
        require(series.size() == target.size(), errc::invalid_argument,
                "select_top_k: misaligned series '" + name + "'");
        auto s = mic(series, target, b_exponent);
        s.name = name;
        scores.push_back(s);
    }
    std::sort(scores.begin(), scores.end(), [](const mic_score& a, const mic_score& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.name < b.name;
    });
    scores.resize(k);
    return scores;
}

} // namespace ws::feat

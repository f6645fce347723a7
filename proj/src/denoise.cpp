#include "denoise.hpp"

#include <algorithm>
#include <cmath>

namespace ws::denoise {

namespace {

double median_abs(std::vector<double> v) {
    for (auto& x : v) x = std::fabs(x);
    const std::size_t n = v.size();
    auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (n & 1) return *mid;
    double hi = *mid;
    double lo = *std::max_element(v.begin(), mid);
    return 0.5 * (lo + hi);
}

std::vector<double> apply_shrink(const std::vector<double>& w, double lambda, shrink_kind kind) {
    return kind == shrink_kind::hard ? hard_threshold(w, lambda) : soft_threshold(w, lambda);
}

} // namespace

std::vector<double> hard_threshold(const std::vector<double>& w, double lambda) {
    require(lambda >= 0.0, errc::invalid_argument, "negative threshold");
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = std::fabs(w[i]) >= lambda ? w[i] : 0.0;
    return out;
}

std::vector<double> soft_threshold(const std::vector<double>& w, double lambda) {
    require(lambda >= 0.0, errc::invalid_argument, "negative threshold");
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        double a = std::fabs(w[i]);
        out[i] = a >= lambda ? (w[i] < 0 ? -(a - lambda) : a - lambda) : 0.0;
    }
    return out;
}

std::vector<double> rigrsure_risks(const std::vector<double>& w) {
    const std::size_t n = w.size();
    require(n >= 1, errc::invalid_argument, "rigrsure on empty coefficients");
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = w[i] * w[i];
    std::sort(f.begin(), f.end());

    std::vector<double> risks(n);
    double cum = 0.0;
    const double dn = static_cast<double>(n);
    for (std::size_t k = 1; k <= n; ++k) {
        cum += f[k - 1];
        risks[k - 1] = (dn - 2.0 * static_cast<double>(k) + cum +
                        static_cast<double>(n - k) * f[k - 1]) /
                       dn;
    }
    return risks;
}

double rigrsure_threshold(const std::vector<double>& w) {
    auto risks = rigrsure_risks(w);
    const std::size_t n = w.size();
    std::size_t best_k = 1;
    for (std::size_t k = 2; k <= n; ++k)
        if (risks[k - 1] < risks[best_k - 1]) best_k = k;  // first minimum on ties

    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = w[i] * w[i];
    std::sort(f.begin(), f.end());
    return std::sqrt(f[best_k - 1]);
}

double universal_threshold(std::size_t n) {
    require(n >= 1, errc::invalid_argument, "universal threshold on empty coefficients");
    return std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

double noise_scale(const std::vector<double>& level1_detail) {
    require(!level1_detail.empty(), errc::invalid_argument, "noise scale on empty detail");
    return median_abs(level1_detail) / 0.6745;
}

std::vector<double> denoise(const std::vector<double>& signal, const config& cfg) {
    auto w = dwt::wavelet_filters(cfg.wavelet);
    auto dec = dwt::decompose(signal, w, cfg.levels, cfg.mode);

    const double sigma = noise_scale(dec.details.front());
    if (sigma > 0.0) {
        if (cfg.rule.per_level) {
            for (auto& d : dec.details) {
                std::vector<double> unit(d.size());
                for (std::size_t i = 0; i < d.size(); ++i) unit[i] = d[i] / sigma;
                double lambda = cfg.rule.kind == rule_kind::rigrsure
                                    ? rigrsure_threshold(unit)
                                    : universal_threshold(unit.size());
                d = apply_shrink(d, sigma * lambda, cfg.shrink);
            }
        } else {
            std::vector<double> pooled;
            for (const auto& d : dec.details)
                for (double v : d) pooled.push_back(v / sigma);
            double lambda = cfg.rule.kind == rule_kind::rigrsure
                                ? rigrsure_threshold(pooled)
                                : universal_threshold(pooled.size());
            for (auto& d : dec.details) d = apply_shrink(d, sigma * lambda, cfg.shrink);
        }
    }
    return dwt::reconstruct(dec);
}

} // namespace ws::denoise

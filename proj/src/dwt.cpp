#include "dwt.hpp"

#include <algorithm>
#include <cmath>

namespace ws::dwt {

namespace {

const double SQRT1_2 = 0.70710678118654752440;

// Daubechies order-4 scaling taps (minimum phase), from spectral factorization
// of the degree-3 half-band polynomial; sum is sqrt(2) to the last bit.
const double DB4_G[8] = {
    0.2303778133088965,   0.7148465705529157,   0.6308807679298589,
    -0.027983769416859854, -0.18703481171909309, 0.030841381835560764,
    0.0328830116668852,   -0.010597401785069032,
};

std::vector<double> qmf_highpass(const std::vector<double>& g) {
    const std::size_t K = g.size();
    std::vector<double> h(K);
    for (std::size_t k = 0; k < K; ++k)
        h[k] = ((k & 1) ? -1.0 : 1.0) * g[K - 1 - k];
    return h;
}

// half-sample symmetric extension by m samples each side; reflects repeatedly
// when m exceeds the signal length
std::vector<double> sym_extend(const std::vector<double>& x, std::size_t m) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
    std::vector<double> e;
    e.reserve(x.size() + 2 * m);
    for (std::ptrdiff_t i = -static_cast<std::ptrdiff_t>(m); i < n + static_cast<std::ptrdiff_t>(m);
         ++i) {
        std::ptrdiff_t j = i;
        while (j < 0 || j >= n) j = (j < 0) ? -1 - j : 2 * n - 1 - j;
        e.push_back(x[static_cast<std::size_t>(j)]);
    }
    return e;
}

void analysis_step(const std::vector<double>& x, const discrete_wavelet& w, boundary mode,
                   std::vector<double>& approx, std::vector<double>& detail) {
    const std::size_t K = w.support();
    const auto& g = w.lowpass;
    const auto& h = w.highpass;
    const std::size_t L = level_length(x.size(), K, mode);
    approx.assign(L, 0.0);
    detail.assign(L, 0.0);

    if (mode == boundary::periodic) {
        std::vector<double> xe = x;
        if (xe.size() & 1) xe.push_back(0.0);
        const std::size_t ne = xe.size();
        for (std::size_t m = 0; m < L; ++m) {
            double a = 0.0, d = 0.0;
            for (std::size_t k = 0; k < K; ++k) {
                double v = xe[(2 * m + k) % ne];
                a += g[k] * v;
                d += h[k] * v;
            }
            approx[m] = a;
            detail[m] = d;
        }
    } else {
        std::vector<double> e = sym_extend(x, K - 1);
        for (std::size_t m = 0; m < L; ++m) {
            double a = 0.0, d = 0.0;
            for (std::size_t k = 0; k < K; ++k) {
                double v = e[2 * m + k];
                a += g[k] * v;
                d += h[k] * v;
            }
            approx[m] = a;
            detail[m] = d;
        }
    }
}

std::vector<double> synthesis_step(const std::vector<double>& approx,
                                   const std::vector<double>& detail, const discrete_wavelet& w,
                                   boundary mode, std::size_t out_len) {
    const std::size_t K = w.support();
    const auto& g = w.lowpass;
    const auto& h = w.highpass;
    const std::size_t L = approx.size();

    if (mode == boundary::periodic) {
        const std::size_t ne = out_len + (out_len & 1);
        std::vector<double> out(ne, 0.0);
        for (std::size_t m = 0; m < L; ++m) {
            for (std::size_t k = 0; k < K; ++k)
                out[(2 * m + k) % ne] += approx[m] * g[k] + detail[m] * h[k];
        }
        out.resize(out_len);
        return out;
    }
    std::vector<double> out(out_len, 0.0);
    const std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(K) - 1;
    for (std::size_t m = 0; m < L; ++m) {
        for (std::size_t k = 0; k < K; ++k) {
            std::ptrdiff_t t = static_cast<std::ptrdiff_t>(2 * m + k) - shift;
            if (t >= 0 && t < static_cast<std::ptrdiff_t>(out_len))
                out[static_cast<std::size_t>(t)] += approx[m] * g[k] + detail[m] * h[k];
        }
    }
    return out;
}

} // namespace

discrete_wavelet wavelet_filters(const std::string& name) {
    discrete_wavelet w;
    w.name = name;
    if (name == "haar") {
        w.lowpass = {SQRT1_2, SQRT1_2};
    } else if (name == "db4") {
        w.lowpass.assign(DB4_G, DB4_G + 8);
    } else {
        fail(errc::invalid_argument, "unknown wavelet '" + name + "' (expected haar or db4)");
    }
    w.highpass = qmf_highpass(w.lowpass);
    return w;
}

int max_level(std::size_t n) {
    require(n >= 2, errc::invalid_argument, "max_level requires n >= 2");
    int j = 0;
    while (n >= 2) {
        n >>= 1;
        ++j;
    }
    return j;
}

std::size_t level_length(std::size_t n, std::size_t support, boundary mode) {
    if (mode == boundary::periodic) return (n + 1) / 2;
    return (n + support) / 2;
}

decomposition decompose(const std::vector<double>& signal, const discrete_wavelet& w, int levels,
                        boundary mode) {
    require(levels >= 1, errc::invalid_argument, "levels must be >= 1");
    require(signal.size() >= w.support(), errc::invalid_argument, "signal shorter than filter");
    require(levels <= max_level(signal.size()), errc::invalid_argument,
            "levels " + std::to_string(levels) + " exceeds max_level " +
                std::to_string(max_level(signal.size())));

    decomposition d;
    d.wavelet = w;
    d.mode = mode;
    d.original_length = signal.size();
    d.details.resize(static_cast<std::size_t>(levels));

    std::vector<double> a = signal;
    for (int j = 0; j < levels; ++j) {
        std::vector<double> next, det;
        analysis_step(a, w, mode, next, det);
        d.details[static_cast<std::size_t>(j)] = std::move(det);
        a = std::move(next);
    }
    d.approx = std::move(a);
    return d;
}

std::vector<double> reconstruct(const decomposition& d) {
    require(d.levels() >= 1, errc::invalid_argument, "empty decomposition");
    // re-derive the level length chain from original_length and validate
    std::vector<std::size_t> lens(static_cast<std::size_t>(d.levels()));
    std::size_t n = d.original_length;
    for (int j = 0; j < d.levels(); ++j) {
        lens[static_cast<std::size_t>(j)] = n;
        n = level_length(n, d.wavelet.support(), d.mode);
        require(d.details[static_cast<std::size_t>(j)].size() == n, errc::invalid_argument,
                "inconsistent detail length at level " + std::to_string(j + 1));
    }
    require(d.approx.size() == n, errc::invalid_argument, "inconsistent approximation length");

    std::vector<double> a = d.approx;
    for (int j = d.levels() - 1; j >= 0; --j)
        a = synthesis_step(a, d.details[static_cast<std::size_t>(j)], d.wavelet, d.mode,
                           lens[static_cast<std::size_t>(j)]);
    return a;
}

} // namespace ws::dwt

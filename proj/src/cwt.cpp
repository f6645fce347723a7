#include "cwt.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace ws::cwt {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
const double PI_QUARTER_INV = std::pow(PI, -0.25);

// FFTW plans are cached per transform size and shared across threads; the
// new-array execute API is thread-safe on a single plan. FFTW_UNALIGNED keeps
// one plan valid for any input buffer.
class fft_plans {
public:
    static fft_plans& instance() {
        static fft_plans p;
        return p;
    }

    void forward(std::vector<std::complex<double>>& inout) { run(inout, FFTW_FORWARD); }

    void inverse(std::vector<std::complex<double>>& inout) {
        run(inout, FFTW_BACKWARD);
        const double scale = 1.0 / static_cast<double>(inout.size());
        for (auto& v : inout) v *= scale;
    }

private:
    void run(std::vector<std::complex<double>>& inout, int sign) {
        fftw_plan plan = nullptr;
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto key = std::make_pair(inout.size(), sign);
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<std::complex<double>> probe(inout.size());
                plan = fftw_plan_dft_1d(static_cast<int>(inout.size()),
                                        reinterpret_cast<fftw_complex*>(probe.data()),
                                        reinterpret_cast<fftw_complex*>(probe.data()), sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
                require(plan != nullptr, errc::internal, "fftw plan failed");
                plans_[key] = plan;
            } else {
                plan = it->second;
            }
        }
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(inout.data()),
                         reinterpret_cast<fftw_complex*>(inout.data()));
    }

    std::mutex mu_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

void check_grid(const scale_grid& g) {
    require(g.s0 > 0.0 && g.dj > 0.0 && g.count >= 1, errc::invalid_argument,
            "invalid scale grid");
}

// kernel sample K[j] = conj(psi(j dt / s)) * sqrt(dt / s)
std::complex<double> kernel_at(const mother_wavelet& psi, double s, double dt, double j) {
    return std::conj(psi.value(j * dt / s)) * std::sqrt(dt / s);
}

} // namespace

std::complex<double> mother_wavelet::value(double t) const {
    const double envelope = std::exp(-0.5 * t * t);
    if (kind == mother_kind::morlet)
        return PI_QUARTER_INV * envelope * std::complex<double>(std::cos(omega0 * t),
                                                                std::sin(omega0 * t));
    // first derivative of a Gaussian, unit L2 norm, exactly zero mean
    return {-1.4142135623730951 * PI_QUARTER_INV * t * envelope, 0.0};
}

double mother_wavelet::center_frequency() const {
    if (kind == mother_kind::morlet) return omega0 / (2.0 * PI);
    return 1.0 / (2.0 * PI);
}

mother_wavelet make_mother(const std::string& name, double omega0) {
    mother_wavelet m;
    if (name == "morlet") {
        require(omega0 >= 5.0, errc::invalid_argument,
                "morlet omega0 must be >= 5 for near-zero mean");
        m.kind = mother_kind::morlet;
        m.omega0 = omega0;
    } else if (name == "gaussian1") {
        m.kind = mother_kind::gaussian1;
    } else {
        fail(errc::invalid_argument, "unknown mother wavelet '" + name + "'");
    }
    return m;
}

double scale_grid::scale(int j) const { return s0 * std::pow(2.0, dj * j); }

std::vector<double> scale_grid::scales() const {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = scale(j);
    return out;
}

scale_grid default_grid(std::size_t n, double dt, double dj) {
    require(n >= 8 && dt > 0.0 && dj > 0.0, errc::invalid_argument, "bad grid parameters");
    scale_grid g;
    g.s0 = 2.0 * dt;
    g.dj = dj;
    const double max_scale = static_cast<double>(n) * dt / 4.0;
    g.count = 1 + static_cast<int>(std::floor(std::log2(max_scale / g.s0) / dj));
    if (g.count < 1) g.count = 1;
    return g;
}

coefficients transform(const std::vector<double>& x, const mother_wavelet& psi,
                       const scale_grid& grid, double dt, padding pad, path p) {
    const std::size_t n = x.size();
    require(n >= 4, errc::invalid_argument, "cwt needs at least 4 samples");
    require(dt > 0.0, errc::invalid_argument, "dt must be positive");
    check_grid(grid);

    coefficients out;
    out.rows = static_cast<std::size_t>(grid.count);
    out.cols = n;
    out.w.assign(out.rows * out.cols, {0.0, 0.0});

    // kernel index range: zero padding truncates at the data extent; periodic
    // padding uses one circular period centered on lag zero
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
    const std::ptrdiff_t jlo = pad == padding::zero ? -(nn - 1) : -(nn / 2);
    const std::ptrdiff_t jhi = pad == padding::zero ? nn - 1 : nn - 1 - nn / 2;

    if (p == path::direct) {
        std::vector<std::complex<double>> ker(static_cast<std::size_t>(jhi - jlo + 1));
        for (int r = 0; r < grid.count; ++r) {
            const double s = grid.scale(r);
            for (std::ptrdiff_t j = jlo; j <= jhi; ++j)
                ker[static_cast<std::size_t>(j - jlo)] =
                    kernel_at(psi, s, dt, static_cast<double>(j));
            for (std::size_t idx = 0; idx < n; ++idx) {
                std::complex<double> acc{0.0, 0.0};
                if (pad == padding::zero) {
                    for (std::size_t m = 0; m < n; ++m) {
                        std::ptrdiff_t j = static_cast<std::ptrdiff_t>(m) -
                                           static_cast<std::ptrdiff_t>(idx);
                        acc += x[m] * ker[static_cast<std::size_t>(j - jlo)];
                    }
                } else {
                    for (std::ptrdiff_t j = jlo; j <= jhi; ++j) {
                        std::ptrdiff_t m = (static_cast<std::ptrdiff_t>(idx) + j) % nn;
                        if (m < 0) m += nn;
                        acc += x[static_cast<std::size_t>(m)] *
                               ker[static_cast<std::size_t>(j - jlo)];
                    }
                }
                out.at(static_cast<std::size_t>(r), idx) = acc;
            }
        }
        return out;
    }

    // fast path: circular convolution of the (zero-padded) signal with the
    // reversed kernel evaluates W[n] = sum_m x[m] K[m - n]
    const std::size_t M = pad == padding::zero ? next_pow2(2 * n) : n;
    std::vector<std::complex<double>> xf(M, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) xf[i] = x[i];
    fft_plans::instance().forward(xf);

    std::vector<std::complex<double>> kf(M);
    for (int r = 0; r < grid.count; ++r) {
        const double s = grid.scale(r);
        std::fill(kf.begin(), kf.end(), std::complex<double>{0.0, 0.0});
        for (std::ptrdiff_t j = jlo; j <= jhi; ++j) {
            std::size_t pos = static_cast<std::size_t>(
                ((-j) % static_cast<std::ptrdiff_t>(M) + static_cast<std::ptrdiff_t>(M)) %
                static_cast<std::ptrdiff_t>(M));
            kf[pos] = kernel_at(psi, s, dt, static_cast<double>(j));
        }
        fft_plans::instance().forward(kf);
        for (std::size_t i = 0; i < M; ++i) kf[i] *= xf[i];
        fft_plans::instance().inverse(kf);
        for (std::size_t idx = 0; idx < n; ++idx)
            out.at(static_cast<std::size_t>(r), idx) = kf[idx];
    }
    return out;
}

std::vector<double> power(const coefficients& w) {
    std::vector<double> out(w.w.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(w.w[i]);
    return out;
}

std::vector<double> cone_of_influence(std::size_t n, double dt, const mother_wavelet& psi) {
    require(n >= 2, errc::invalid_argument, "coi needs n >= 2");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double edge = static_cast<double>(std::min(i, n - 1 - i));
        out[i] = edge * dt / psi.efolding();
    }
    return out;
}

double equivalent_frequency(double s, double dt, const mother_wavelet& psi) {
    require(s > 0.0 && dt > 0.0, errc::invalid_argument, "scale and dt must be positive");
    return psi.center_frequency() / (s * dt);
}

scalogram make_scalogram(const std::vector<double>& x, const mother_wavelet& psi,
                         const scale_grid& grid, double dt, const std::string& source_id,
                         padding pad, path p) {
    scalogram sg;
    auto w = transform(x, psi, grid, dt, pad, p);
    sg.rows = w.rows;
    sg.cols = w.cols;
    sg.power = power(w);
    sg.grid = grid;
    sg.dt = dt;
    sg.coi = cone_of_influence(x.size(), dt, psi);
    sg.source_id = source_id;
    return sg;
}

gray_image render(const scalogram& sg, const image_spec& spec) {
    require(spec.height >= 8 && spec.width >= 8, errc::invalid_argument,
            "image dimensions must be >= 8");
    require(sg.rows >= 1 && sg.cols >= 2, errc::invalid_argument, "degenerate scalogram");

    const std::size_t R = sg.rows, C = sg.cols;
    std::vector<double> logp(R * C);
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < logp.size(); ++i) {
        require(std::isfinite(sg.power[i]), errc::invalid_argument, "non-finite power");
        logp[i] = std::log10(sg.power[i] + 1e-12);
        lo = std::min(lo, logp[i]);
        hi = std::max(hi, logp[i]);
    }

    gray_image img;
    img.height = spec.height;
    img.width = spec.width;
    img.pixels.assign(static_cast<std::size_t>(spec.height * spec.width), 0);

    const bool flat = !(hi > lo);
    const double span = hi - lo;
    for (int r = 0; r < spec.height; ++r) {
        // geometric scale grid is uniform in log2(s), so index space is the
        // log-scale axis already
        double y = spec.height == 1 ? 0.0
                                    : static_cast<double>(r) * static_cast<double>(R - 1) /
                                          static_cast<double>(spec.height - 1);
        std::size_t y0 = static_cast<std::size_t>(y);
        if (y0 + 1 >= R) y0 = R >= 2 ? R - 2 : 0;
        double fy = y - static_cast<double>(y0);
        if (R == 1) fy = 0.0;
        for (int c = 0; c < spec.width; ++c) {
            double xq = spec.width == 1 ? 0.0
                                        : static_cast<double>(c) * static_cast<double>(C - 1) /
                                              static_cast<double>(spec.width - 1);
            std::size_t x0 = static_cast<std::size_t>(xq);
            if (x0 + 1 >= C) x0 = C - 2;
            double fx = xq - static_cast<double>(x0);

            std::uint8_t px = 128;
            if (!flat) {
                const std::size_t r1 = R == 1 ? y0 : y0 + 1;
                double v00 = logp[y0 * C + x0], v01 = logp[y0 * C + x0 + 1];
                double v10 = logp[r1 * C + x0], v11 = logp[r1 * C + x0 + 1];
                double v = (1 - fy) * ((1 - fx) * v00 + fx * v01) +
                           fy * ((1 - fx) * v10 + fx * v11);
                double t = (v - lo) / span * 255.0;
                px = static_cast<std::uint8_t>(std::lround(std::clamp(t, 0.0, 255.0)));
            }

            if (spec.mask != coi_mask::none) {
                double sj = sg.grid.scale(static_cast<int>(std::lround(y)));
                double trusted = sg.coi[static_cast<std::size_t>(std::lround(xq))];
                if (sj > trusted)
                    px = spec.mask == coi_mask::zero ? 0 : static_cast<std::uint8_t>(px / 2);
            }
            img.pixels[static_cast<std::size_t>(r) * static_cast<std::size_t>(spec.width) +
                       static_cast<std::size_t>(c)] = px;
        }
    }
    return img;
}

} // namespace ws::cwt

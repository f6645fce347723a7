// Continuous wavelet transform (Morlet and Gaussian-order-1 mothers),
// power scalogram, cone of influence, and grayscale rendering.
//
// W_n(s) = sqrt(dt/s) * sum_{n'} x[n'] psi*((n'-n) dt / s)
// with scales s in time units. Both a direct-sum path and an FFT path are
// provided; they evaluate the same discrete sum (the FFT path performs the
// identical truncated-kernel convolution), so they agree to rounding.
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ws::cwt {

enum class mother_kind { morlet, gaussian1 };

struct mother_wavelet {
    mother_kind kind = mother_kind::morlet;
    double omega0 = 6.0;  // morlet non-dimensional center frequency, >= 5

    std::complex<double> value(double t) const;
    // peak of |psi-hat(omega)| expressed in cycles: morlet omega0/2pi, gaussian1 1/2pi
    double center_frequency() const;
    // COI e-folding factor (sqrt 2 for both supported mothers)
    double efolding() const { return 1.4142135623730951; }
};

mother_wavelet make_mother(const std::string& name, double omega0 = 6.0);

struct scale_grid {
    double s0 = 2.0;    // smallest scale, time units
    double dj = 0.125;  // octave subdivision
    int count = 1;

    double scale(int j) const;
    std::vector<double> scales() const;
};

// s0 = 2 dt, dj = 1/8, largest scale <= n dt / 4
scale_grid default_grid(std::size_t n, double dt, double dj = 0.125);

enum class padding { zero, periodic };
enum class path { fast, direct };

struct coefficients {
    std::size_t rows = 0;  // scales
    std::size_t cols = 0;  // time
    std::vector<std::complex<double>> w;  // row-major

    std::complex<double>& at(std::size_t r, std::size_t c) { return w[r * cols + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const { return w[r * cols + c]; }
};

coefficients transform(const std::vector<double>& x, const mother_wavelet& psi,
                       const scale_grid& grid, double dt, padding pad = padding::zero,
                       path p = path::fast);

// elementwise |W|^2, row-major rows x cols
std::vector<double> power(const coefficients& w);

// per-time-index maximum trusted scale (time units): min(n, N-1-n) dt / efolding
std::vector<double> cone_of_influence(std::size_t n, double dt, const mother_wavelet& psi);

// Eq.-of-proportionality frequency for a dimensionless scale measured in
// sampling intervals: F_eq = C_f / (s dt), cycles per time unit.
double equivalent_frequency(double s, double dt, const mother_wavelet& psi);

struct scalogram {
    std::size_t rows = 0, cols = 0;
    std::vector<double> power;  // row-major, rows follow grid order (ascending scale)
    scale_grid grid;
    double dt = 1.0;
    std::vector<double> coi;
    std::string source_id;

    double at(std::size_t r, std::size_t c) const { return power[r * cols + c]; }
};

scalogram make_scalogram(const std::vector<double>& x, const mother_wavelet& psi,
                         const scale_grid& grid, double dt, const std::string& source_id = "",
                         padding pad = padding::zero, path p = path::fast);

enum class coi_mask { none, zero, dim };

struct image_spec {
    int height = 64;
    int width = 64;
    coi_mask mask = coi_mask::none;
};

struct gray_image {
    int height = 0, width = 0;
    std::vector<std::uint8_t> pixels;  // row-major
};

// log10(power + 1e-12), affine-mapped to [0,255] by per-image min/max,
// bilinearly resampled. Row 0 is the smallest scale. Constant power -> 128.
gray_image render(const scalogram& sg, const image_spec& spec);

} // namespace ws::cwt

// Decimated discrete wavelet transform (Mallat cascade) for Haar and db4.
//
// Analysis convention: output m of a level is the correlation
//   y[m] = sum_k f[k] * x~[2m + k]
// over the boundary-extended input x~. Synthesis places the same (unreversed)
// taps back as atoms, which inverts the analysis exactly for both boundary
// modes. Highpass taps follow the quadrature-mirror rule
//   h[k] = (-1)^k g[K-1-k].
//
// Boundary modes:
//   symmetric  - half-sample reflection, K-1 samples each side; level length
//                floor((n + K) / 2). Redundant but exactly invertible.
//   periodic   - wrapped convolution; odd-length levels are zero-padded by
//                one sample first, so the transform stays orthogonal and
//                level length is ceil(n / 2). Preserves energy exactly.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ws::dwt {

enum class boundary { symmetric, periodic };

struct discrete_wavelet {
    std::string name;
    std::vector<double> lowpass;   // g, sums to sqrt(2)
    std::vector<double> highpass;  // h, sums to 0
    std::size_t support() const { return lowpass.size(); }
};

// name in {"haar", "db4"}
discrete_wavelet wavelet_filters(const std::string& name);

// floor(log2(n)); n >= 2
int max_level(std::size_t n);

struct decomposition {
    discrete_wavelet wavelet;
    boundary mode = boundary::symmetric;
    std::size_t original_length = 0;
    std::vector<double> approx;                // level-N approximation
    std::vector<std::vector<double>> details;  // details[j] is level j+1

    int levels() const { return static_cast<int>(details.size()); }
};

// length of one analysis step's output bands given input length n
std::size_t level_length(std::size_t n, std::size_t support, boundary mode);

decomposition decompose(const std::vector<double>& signal, const discrete_wavelet& w,
                        int levels, boundary mode = boundary::symmetric);

// exact inverse of decompose for unmodified coefficients
std::vector<double> reconstruct(const decomposition& d);

} // namespace ws::dwt

// Wavelet threshold denoising: hard/soft shrinkage, threshold selection
// (SURE-based "rigrsure" and the universal rule), and the full
// decompose -> shrink details -> reconstruct round trip. The approximation
// band is never thresholded.
#pragma once

#include <string>
#include <vector>

#include "dwt.hpp"

namespace ws::denoise {

enum class shrink_kind { hard, soft };
enum class rule_kind { rigrsure, universal };

struct threshold_rule {
    rule_kind kind = rule_kind::rigrsure;
    bool per_level = true;  // estimate lambda per detail level, else once on pooled details
};

struct config {
    std::string wavelet = "db4";
    int levels = 5;
    shrink_kind shrink = shrink_kind::soft;
    threshold_rule rule;
    dwt::boundary mode = dwt::boundary::symmetric;
};

// w kept where |w| >= lambda, zeroed below
std::vector<double> hard_threshold(const std::vector<double>& w, double lambda);

// sgn(w) * (|w| - lambda) where |w| >= lambda, zero below
std::vector<double> soft_threshold(const std::vector<double>& w, double lambda);

// SURE-minimizing threshold for unit-variance coefficients.
// f(k) = k-th smallest |w|^2 (1-based); candidates lambda_k = sqrt(f(k));
// Risk(k) = [N - 2k + sum_{j<=k} f(j) + (N-k) f(k)] / N; returns sqrt(f(kmin)),
// first k on ties.
double rigrsure_threshold(const std::vector<double>& w);

// the risk curve behind rigrsure_threshold, Risk(k) at index k-1
std::vector<double> rigrsure_risks(const std::vector<double>& w);

// universal rule sqrt(2 ln N) for unit-variance coefficients
double universal_threshold(std::size_t n);

// median(|w|) / 0.6745, the level-1 MAD noise-scale estimate
double noise_scale(const std::vector<double>& level1_detail);

std::vector<double> denoise(const std::vector<double>& signal, const config& cfg);

} // namespace ws::denoise

// Technical indicator series with explicit warmup accounting. Leading
// `warmup` entries of `values` are undefined and must not feed transforms.
#pragma once

#include <string>
#include <vector>

namespace ws::feat {

struct indicator_series {
    std::string name;
    std::vector<double> values;  // aligned with the input; first `warmup` undefined
    std::size_t warmup = 0;

    std::vector<double> defined() const {
        return {values.begin() + static_cast<std::ptrdiff_t>(warmup), values.end()};
    }
};

// seed = simple mean of the first `period` values, then
// e_t = alpha p_t + (1 - alpha) e_{t-1}, alpha = 2 / (period + 1); warmup = period - 1
indicator_series ema(const std::vector<double>& prices, int period);

// Wilder RSI: smoothed gains/losses seeded by the simple mean of the first
// `period` changes; zero average loss -> 100, zero average gain -> 0;
// warmup = period
indicator_series rsi(const std::vector<double>& prices, int period);

// rolling simple mean; warmup = window - 1
indicator_series ma(const std::vector<double>& prices, int window = 60);

// rolling Pearson correlation over a trailing window (high vs low by
// convention); degenerate (constant) windows give 0; warmup = window - 1
indicator_series correl(const std::vector<double>& x, const std::vector<double>& y, int window);

} // namespace ws::feat

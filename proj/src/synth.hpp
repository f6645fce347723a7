// Seeded synthetic intraday data: geometric random walk per minute with an
// optional planted, partially label-predictive structure.
//
// Each day draws a direction D = +-1. Two components scale with
// signal_strength s:
//   - a slow quarter-sine drift over minutes 1..360 whose sign is D; it ties
//     the realized mean_390 label to D,
//   - a Gaussian volatility bump centered at minute 120 (D=+1) or 260 (D=-1);
//     its position survives power spectra and per-image normalization, so the
//     label stays learnable from rendered scalograms.
// s = 0 leaves a plain random walk with labels independent of inputs.
#pragma once

#include <cstdint>
#include <vector>

#include "timeseries.hpp"

namespace ws::ts {

struct synth_config {
    int days = 250;
    double base_price = 100.0;
    double vol_per_minute = 5e-4;
    double signal_strength = 0.0;  // in [0, 1]
    double drift_amplitude = 0.04;
    double vol_bump_depth = 1.0;
    double vol_bump_width = 45.0;   // minutes
    double vol_bump_up = 120.0;     // bump center, D = +1
    double vol_bump_down = 260.0;   // bump center, D = -1
    ws::date start_date{2015, 1, 5};
    label_scheme scheme = label_scheme::mean_390;
};

struct synth_day {
    trading_session session;
    day_label truth;        // realized label of the configured scheme
    int planted_direction;  // +1 or -1
};

struct synth_result {
    std::vector<synth_day> days;

    std::vector<trading_session> sessions() const;
    std::vector<day_label> labels() const;
};

synth_result synth_generate(const synth_config& cfg, std::uint64_t seed);

} // namespace ws::ts

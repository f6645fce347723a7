// Per-day multi-channel feature images: indicator -> per-kind transform
// (log-returns for price-like series, per-day standardization for bounded
// oscillators) -> wavelet denoise -> CWT power -> rendered channel.
// Only the first INPUT_MINUTES minutes of a session are ever read.
#pragma once

#include <string>
#include <vector>

#include "cwt.hpp"
#include "denoise.hpp"
#include "timeseries.hpp"

namespace ws::feat {

struct indicator_params {
    int ema_period = 30;
    int rsi_period = 14;
    int ma_window = 60;
    int correl_window = 30;
};

struct cwt_params {
    double omega0 = 6.0;
    double dj = 0.125;
    double dt = 1.0;
};

struct feature_config {
    std::vector<std::string> indicators{"close", "ema", "rsi", "ma60", "correl"};
    indicator_params ind;
    denoise::config den;
    cwt_params cwt;
    cwt::image_spec image;
    ts::label_scheme scheme = ts::label_scheme::mean_390;
};

struct feature_tensor {
    ws::date day;
    int channels = 0, height = 0, width = 0;
    std::vector<float> data;  // channel-major, pixel intensities in [0, 1]
    int label = 0;
    std::vector<std::string> channel_names;
    double raw_return = 0.0;
};

// the series an indicator name denotes over the input window, with warmup
// dropped; "close" | "ema" | "rsi" | "ma60" | "correl"
std::vector<double> indicator_values(const ts::trading_session& s, const std::string& name,
                                     const indicator_params& p);

feature_tensor build_feature_tensor(const ts::trading_session& session,
                                    const feature_config& cfg);

} // namespace ws::feat

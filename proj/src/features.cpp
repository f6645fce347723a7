#include "features.hpp"

#include <cmath>

#include "errors.hpp"
#include "indicators.hpp"

namespace ws::feat {

namespace {

bool price_like(const std::string& name) {
    return name == "close" || name == "ema" || name == "ma60";
}

std::vector<double> standardize(const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= static_cast<double>(v.size());
    double sd = std::sqrt(var);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = sd > 0.0 ? (v[i] - mean) / sd : 0.0;
    return out;
}

} // namespace

std::vector<double> indicator_values(const ts::trading_session& s, const std::string& name,
                                     const indicator_params& p) {
    require(s.bars.size() == ts::SESSION_MINUTES, errc::invalid_argument,
            "feature input must be a cleaned session");
    std::vector<double> close(ts::INPUT_MINUTES);
    for (int m = 0; m < ts::INPUT_MINUTES; ++m)
        close[static_cast<std::size_t>(m)] = s.bars[static_cast<std::size_t>(m)].close;

    if (name == "close") return close;
    if (name == "ema") return ema(close, p.ema_period).defined();
    if (name == "rsi") return rsi(close, p.rsi_period).defined();
    if (name == "ma60") return ma(close, p.ma_window).defined();
    if (name == "correl") {
        std::vector<double> high(ts::INPUT_MINUTES), low(ts::INPUT_MINUTES);
        for (int m = 0; m < ts::INPUT_MINUTES; ++m) {
            high[static_cast<std::size_t>(m)] = s.bars[static_cast<std::size_t>(m)].high;
            low[static_cast<std::size_t>(m)] = s.bars[static_cast<std::size_t>(m)].low;
        }
        return correl(high, low, p.correl_window).defined();
    }
    fail(errc::invalid_argument, "unknown indicator '" + name + "'");
}

feature_tensor build_feature_tensor(const ts::trading_session& session,
                                    const feature_config& cfg) {
    require(!cfg.indicators.empty(), errc::invalid_argument, "no indicators selected");

    feature_tensor out;
    out.day = session.day;
    out.channels = static_cast<int>(cfg.indicators.size());
    out.height = cfg.image.height;
    out.width = cfg.image.width;
    out.channel_names = cfg.indicators;
    out.data.reserve(static_cast<std::size_t>(out.channels * out.height * out.width));

    const auto mother = cwt::make_mother("morlet", cfg.cwt.omega0);
    for (const auto& name : cfg.indicators) {
        auto series = indicator_values(session, name, cfg.ind);
        if (price_like(name))
            series = ts::log_returns(series, session.day).values;
        else
            series = standardize(series);

        series = denoise::denoise(series, cfg.den);
        for (double v : series)
            require(std::isfinite(v), errc::data,
                    "non-finite value in channel '" + name + "' on " +
                        ws::to_string(session.day));

        auto grid = cwt::default_grid(series.size(), cfg.cwt.dt, cfg.cwt.dj);
        auto sg = cwt::make_scalogram(series, mother, grid, cfg.cwt.dt,
                                      ws::to_string(session.day) + "_" + name);
        auto img = cwt::render(sg, cfg.image);
        for (std::uint8_t px : img.pixels)
            out.data.push_back(static_cast<float>(px) / 255.0f);
    }

    auto lab = ts::make_label(session, cfg.scheme);
    out.label = lab.label;
    out.raw_return = lab.raw_return;
    return out;
}

} // namespace ws::feat

#include "synth.hpp"

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace ws::ts {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

void check(const synth_config& c) {
    require(c.days >= 1, errc::invalid_argument, "synth: days must be >= 1");
    require(c.base_price > 0, errc::invalid_argument, "synth: base price must be positive");
    require(c.vol_per_minute > 0, errc::invalid_argument, "synth: volatility must be positive");
    require(c.signal_strength >= 0.0 && c.signal_strength <= 1.0, errc::invalid_argument,
            "synth: signal strength must be in [0, 1]");
    require(c.drift_amplitude >= 0 && c.vol_bump_depth >= 0 && c.vol_bump_width > 0,
            errc::invalid_argument, "synth: bad drift/vol parameters");
}

} // namespace

std::vector<trading_session> synth_result::sessions() const {
    std::vector<trading_session> out;
    out.reserve(days.size());
    for (const auto& d : days) out.push_back(d.session);
    return out;
}

std::vector<day_label> synth_result::labels() const {
    std::vector<day_label> out;
    out.reserve(days.size());
    for (const auto& d : days) out.push_back(d.truth);
    return out;
}

synth_result synth_generate(const synth_config& cfg, std::uint64_t seed) {
    check(cfg);
    rng gen(seed);
    synth_result out;
    out.days.reserve(static_cast<std::size_t>(cfg.days));

    const double s = cfg.signal_strength;
    ws::date day = ws::is_weekend(cfg.start_date) ? ws::next_weekday(cfg.start_date)
                                                  : cfg.start_date;
    for (int i = 0; i < cfg.days; ++i) {
        const int dir = gen.coin() ? 1 : -1;
        const double bump_center = dir > 0 ? cfg.vol_bump_up : cfg.vol_bump_down;

        trading_session sess;
        sess.day = day;
        sess.bars.reserve(SESSION_MINUTES);

        double logp = std::log(cfg.base_price);
        double cum_drift_prev = 0.0;
        double prev_close = cfg.base_price;
        for (int t = 1; t <= SESSION_MINUTES; ++t) {
            double drift = 0.0;
            double sigma = cfg.vol_per_minute;
            if (t <= INPUT_MINUTES && s > 0.0) {
                double cum = cfg.drift_amplitude * s * dir *
                             std::sin(PI * static_cast<double>(t) / 720.0);
                drift = cum - cum_drift_prev;
                cum_drift_prev = cum;
                double z = (static_cast<double>(t) - bump_center) / cfg.vol_bump_width;
                sigma *= 1.0 + s * cfg.vol_bump_depth * std::exp(-0.5 * z * z);
            }
            logp += drift + sigma * gen.normal();
            const double close = std::exp(logp);

            minute_bar bar;
            bar.day = day;
            bar.minute = t - 1;
            bar.open = prev_close;
            // independent intrabar excursions keep high/low informative
            bar.high = std::max(bar.open, close) *
                       std::exp(std::fabs(gen.normal()) * 0.5 * cfg.vol_per_minute);
            bar.low = std::min(bar.open, close) /
                      std::exp(std::fabs(gen.normal()) * 0.5 * cfg.vol_per_minute);
            bar.close = close;
            bar.volume = std::floor(1000.0 + 500.0 * gen.uniform());
            sess.bars.push_back(bar);
            prev_close = close;
        }

        synth_day sd;
        sd.truth = make_label(sess, cfg.scheme);
        sd.session = std::move(sess);
        sd.planted_direction = dir;
        out.days.push_back(std::move(sd));
        day = ws::next_weekday(day);
    }
    return out;
}

} // namespace ws::ts

#include "indicators.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ws::feat {

indicator_series ema(const std::vector<double>& prices, int period) {
    require(period >= 1, errc::invalid_argument, "ema: period must be >= 1");
    require(prices.size() >= static_cast<std::size_t>(period), errc::invalid_argument,
            "ema: series shorter than period");
    indicator_series out;
    out.name = "ema";
    out.warmup = static_cast<std::size_t>(period - 1);
    out.values.assign(prices.size(), 0.0);

    double seed = 0.0;
    for (int i = 0; i < period; ++i) seed += prices[static_cast<std::size_t>(i)];
    seed /= static_cast<double>(period);
    out.values[out.warmup] = seed;

    const double alpha = 2.0 / (static_cast<double>(period) + 1.0);
    double e = seed;
    for (std::size_t i = out.warmup + 1; i < prices.size(); ++i) {
        e = alpha * prices[i] + (1.0 - alpha) * e;
        out.values[i] = e;
    }
    return out;
}

indicator_series rsi(const std::vector<double>& prices, int period) {
    require(period >= 1, errc::invalid_argument, "rsi: period must be >= 1");
    require(prices.size() > static_cast<std::size_t>(period), errc::invalid_argument,
            "rsi: series shorter than period + 1");
    indicator_series out;
    out.name = "rsi";
    out.warmup = static_cast<std::size_t>(period);
    out.values.assign(prices.size(), 0.0);

    double avg_gain = 0.0, avg_loss = 0.0;
    for (int i = 1; i <= period; ++i) {
        double ch = prices[static_cast<std::size_t>(i)] - prices[static_cast<std::size_t>(i - 1)];
        (ch >= 0 ? avg_gain : avg_loss) += std::fabs(ch);
    }
    avg_gain /= static_cast<double>(period);
    avg_loss /= static_cast<double>(period);

    auto to_rsi = [](double g, double l) {
        if (l == 0.0) return 100.0;
        return 100.0 - 100.0 / (1.0 + g / l);
    };
    out.values[out.warmup] = to_rsi(avg_gain, avg_loss);

    const double p = static_cast<double>(period);
    for (std::size_t i = out.warmup + 1; i < prices.size(); ++i) {
        double ch = prices[i] - prices[i - 1];
        avg_gain = (avg_gain * (p - 1.0) + std::max(ch, 0.0)) / p;
        avg_loss = (avg_loss * (p - 1.0) + std::max(-ch, 0.0)) / p;
        out.values[i] = to_rsi(avg_gain, avg_loss);
    }
    return out;
}

indicator_series ma(const std::vector<double>& prices, int window) {
    require(window >= 1, errc::invalid_argument, "ma: window must be >= 1");
    require(prices.size() >= static_cast<std::size_t>(window), errc::invalid_argument,
            "ma: series shorter than window");
    indicator_series out;
    out.name = "ma" + std::to_string(window);
    out.warmup = static_cast<std::size_t>(window - 1);
    out.values.assign(prices.size(), 0.0);

    double acc = 0.0;
    for (std::size_t i = 0; i < prices.size(); ++i) {
        acc += prices[i];
        if (i >= static_cast<std::size_t>(window)) acc -= prices[i - static_cast<std::size_t>(window)];
        if (i >= out.warmup) out.values[i] = acc / static_cast<double>(window);
    }
    return out;
}

indicator_series correl(const std::vector<double>& x, const std::vector<double>& y, int window) {
    require(window >= 2, errc::invalid_argument, "correl: window must be >= 2");
    require(x.size() == y.size(), errc::invalid_argument, "correl: series length mismatch");
    require(x.size() >= static_cast<std::size_t>(window), errc::invalid_argument,
            "correl: series shorter than window");
    indicator_series out;
    out.name = "correl";
    out.warmup = static_cast<std::size_t>(window - 1);
    out.values.assign(x.size(), 0.0);

    const std::size_t w = static_cast<std::size_t>(window);
    for (std::size_t i = out.warmup; i < x.size(); ++i) {
        const std::size_t from = i + 1 - w;
        double mx = 0, my = 0;
        for (std::size_t j = from; j <= i; ++j) {
            mx += x[j];
            my += y[j];
        }
        mx /= static_cast<double>(w);
        my /= static_cast<double>(w);
        double sxx = 0, syy = 0, sxy = 0;
        for (std::size_t j = from; j <= i; ++j) {
            double dx = x[j] - mx, dy = y[j] - my;
            sxx += dx * dx;
            syy += dy * dy;
            sxy += dx * dy;
        }
        double denom = std::sqrt(sxx * syy);
        double r = denom > 0.0 ? sxy / denom : 0.0;
        out.values[i] = std::clamp(r, -1.0, 1.0);
    }
    return out;
}

} // namespace ws::feat

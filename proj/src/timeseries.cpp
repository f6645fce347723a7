#include "timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace ws::ts {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "YYYY-MM-DD HH:MM[:SS]" or with 'T' separator
bool parse_timestamp(const std::string& s, ws::date& d, int& minute_of_day) {
    int y, mo, da, h, mi;
    int sec = 0;
    int n = std::sscanf(s.c_str(), "%d-%d-%d%*1[T ]%d:%d:%d", &y, &mo, &da, &h, &mi, &sec);
    if (n < 5) return false;
    if (mo < 1 || mo > 12 || da < 1 || da > 31 || h < 0 || h > 23 || mi < 0 || mi > 59)
        return false;
    d = {y, mo, da};
    minute_of_day = h * 60 + mi;
    return true;
}

double parse_price(const std::string& s, bool& ok) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        ok = pos == s.size() && std::isfinite(v);
        return v;
    } catch (...) {
        ok = false;
        return 0.0;
    }
}

} // namespace

std::vector<raw_session> load_intraday_csv(const std::string& path, const csv_schema& schema) {
    std::ifstream f(path);
    require(f.good(), errc::io, "cannot open: " + path);

    std::string line;
    require(static_cast<bool>(std::getline(f, line)), errc::parse, path + ": empty file");
    auto header = split_csv_line(line);
    auto col = [&](const std::string& name) -> int {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    };
    const int c_ts = col(schema.timestamp);
    const int c_open = col(schema.open);
    const int c_high = col(schema.high);
    const int c_low = col(schema.low);
    const int c_close = col(schema.close);
    const int c_vol = col(schema.volume);
    require(c_ts >= 0, errc::parse, path + ": missing column '" + schema.timestamp + "'");
    require(c_close >= 0, errc::parse, path + ": missing column '" + schema.close + "'");

    std::map<ws::date, raw_session> by_date;
    std::size_t lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        auto at_line = [&](const std::string& what) {
            return path + ":" + std::to_string(lineno) + ": " + what;
        };
        require(fields.size() >= header.size(), errc::parse, at_line("too few columns"));

        ws::date d;
        int mod = 0;
        require(parse_timestamp(fields[static_cast<std::size_t>(c_ts)], d, mod), errc::parse,
                at_line("bad timestamp '" + fields[static_cast<std::size_t>(c_ts)] + "'"));
        int minute = mod - schema.session_open_minute;
        require(minute >= 0 && minute < SESSION_MINUTES, errc::parse,
                at_line("timestamp outside session window"));

        minute_bar bar;
        bar.day = d;
        bar.minute = minute;
        bool ok = true;
        bar.close = parse_price(fields[static_cast<std::size_t>(c_close)], ok);
        require(ok, errc::parse, at_line("bad close price"));
        auto price_or_close = [&](int c) {
            if (c < 0) return bar.close;
            bool k = true;
            double v = parse_price(fields[static_cast<std::size_t>(c)], k);
            require(k, errc::parse, at_line("bad price field"));
            return v;
        };
        bar.open = price_or_close(c_open);
        bar.high = price_or_close(c_high);
        bar.low = price_or_close(c_low);
        require(bar.close > 0 && bar.open > 0 && bar.high > 0 && bar.low > 0, errc::parse,
                at_line("non-positive price"));
        if (c_vol >= 0 && !fields[static_cast<std::size_t>(c_vol)].empty()) {
            bool k = true;
            double v = parse_price(fields[static_cast<std::size_t>(c_vol)], k);
            require(k, errc::parse, at_line("bad volume field"));
            bar.volume = v;
        }

        auto& sess = by_date[d];
        sess.day = d;
        for (const auto& b : sess.bars)
            require(b.minute != minute, errc::parse,
                    at_line("duplicate timestamp '" + fields[static_cast<std::size_t>(c_ts)] +
                            "'"));
        sess.bars.push_back(bar);
    }

    std::vector<raw_session> out;
    out.reserve(by_date.size());
    for (auto& [d, s] : by_date) {
        std::sort(s.bars.begin(), s.bars.end(),
                  [](const minute_bar& a, const minute_bar& b) { return a.minute < b.minute; });
        out.push_back(std::move(s));
    }
    return out;
}

void write_intraday_csv(const std::string& path, const std::vector<trading_session>& sessions,
                        const csv_schema& schema) {
    std::ofstream f(path, std::ios::trunc);
    require(f.good(), errc::io, "cannot open for write: " + path);
    f << schema.timestamp << ',' << schema.open << ',' << schema.high << ',' << schema.low << ','
      << schema.close << ',' << schema.volume << '\n';
    char buf[96];
    for (const auto& s : sessions) {
        for (const auto& b : s.bars) {
            int mod = schema.session_open_minute + b.minute;
            std::snprintf(buf, sizeof buf, "%sT%02d:%02d", to_string(b.day).c_str(), mod / 60,
                          mod % 60);
            f << buf << ',';
            std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g", b.open, b.high, b.low,
                          b.close);
            f << buf << ',';
            if (b.volume) f << *b.volume;
            f << '\n';
        }
    }
    require(f.good(), errc::io, "write failed: " + path);
}

clean_result clean_sessions(const std::vector<raw_session>& raw) {
    clean_result out;
    for (const auto& r : raw) {
        const std::string day = ws::to_string(r.day);
        if (ws::is_weekend(r.day)) {
            out.report.push_back("DROPPED " + day + " weekend");
            continue;
        }
        if (r.bars.empty()) {
            out.report.push_back("DROPPED " + day + " empty session");
            continue;
        }
        const int missing = SESSION_MINUTES - static_cast<int>(r.bars.size());
        if (missing > MAX_FILL) {
            out.report.push_back("DROPPED " + day + " missing > " + std::to_string(MAX_FILL) +
                                 " minutes (half-day or sparse, " + std::to_string(missing) +
                                 " absent)");
            continue;
        }
        if (r.bars.front().minute != 0) {
            out.report.push_back("DROPPED " + day + " leading gap (no prior observation to fill)");
            continue;
        }

        trading_session s;
        s.day = r.day;
        s.bars.reserve(SESSION_MINUTES);
        std::size_t src = 0;
        bool last_filled = false;
        for (int m = 0; m < SESSION_MINUTES; ++m) {
            if (src < r.bars.size() && r.bars[src].minute == m) {
                s.bars.push_back(r.bars[src]);
                ++src;
                last_filled = false;
            } else {
                minute_bar fill = s.bars.back();  // forward fill: last valid observation
                fill.minute = m;
                fill.open = fill.high = fill.low = fill.close;
                fill.volume.reset();
                s.bars.push_back(fill);
                ++s.fill_count;
                last_filled = true;
            }
        }
        out.sessions.push_back(std::move(s));
        if (last_filled)
            out.report.push_back("FLAGGED " + day + " minute-390-filled");
    }
    return out;
}

return_series log_returns(const std::vector<double>& prices, ws::date base_date) {
    require(prices.size() >= 2, errc::invalid_argument, "log_returns needs at least 2 prices");
    return_series out;
    out.base_date = base_date;
    out.values.resize(prices.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
        require(prices[i] > 0 && prices[i + 1] > 0, errc::invalid_argument,
                "non-positive price in log_returns");
        out.values[i] = std::log(prices[i + 1]) - std::log(prices[i]);
    }
    return out;
}

label_scheme parse_label_scheme(const std::string& name) {
    if (name == "mean_390") return label_scheme::mean_390;
    if (name == "y_360_361") return label_scheme::y_360_361;
    if (name == "y_360_mean") return label_scheme::y_360_mean;
    if (name == "y_360_390") return label_scheme::y_360_390;
    if (name == "y_mean_mean") return label_scheme::y_mean_mean;
    fail(errc::invalid_argument, "unknown label scheme '" + name + "'");
}

std::string to_string(label_scheme s) {
    switch (s) {
        case label_scheme::mean_390: return "mean_390";
        case label_scheme::y_360_361: return "y_360_361";
        case label_scheme::y_360_mean: return "y_360_mean";
        case label_scheme::y_360_390: return "y_360_390";
        case label_scheme::y_mean_mean: return "y_mean_mean";
    }
    fail(errc::internal, "bad label scheme");
}

day_label make_label(const trading_session& s, label_scheme scheme) {
    require(s.bars.size() == SESSION_MINUTES, errc::invalid_argument,
            "make_label needs a full session of " + std::to_string(SESSION_MINUTES) + " bars");
    auto mean_close = [&](int from, int to) {  // 1-based inclusive
        double acc = 0.0;
        for (int m = from; m <= to; ++m) acc += s.close_at(m);
        return acc / static_cast<double>(to - from + 1);
    };

    double lhs = 0.0, rhs = 0.0;
    switch (scheme) {
        case label_scheme::mean_390:
            lhs = mean_close(1, INPUT_MINUTES);
            rhs = s.close_at(SESSION_MINUTES);
            break;
        case label_scheme::y_360_361:
            lhs = s.close_at(360);
            rhs = s.close_at(361);
            break;
        case label_scheme::y_360_mean:
            lhs = s.close_at(360);
            rhs = mean_close(361, SESSION_MINUTES);
            break;
        case label_scheme::y_360_390:
            lhs = s.close_at(360);
            rhs = s.close_at(SESSION_MINUTES);
            break;
        case label_scheme::y_mean_mean:
            lhs = mean_close(1, INPUT_MINUTES);
            rhs = mean_close(361, SESSION_MINUTES);
            break;
    }

    day_label out;
    out.day = s.day;
    out.scheme = scheme;
    out.raw_return = std::log(rhs) - std::log(lhs);
    out.label = lhs < rhs ? 1 : 0;  // tie (lhs >= rhs) -> 0
    return out;
}

histogram return_histogram(const std::vector<day_label>& labels, std::size_t bins) {
    require(!labels.empty(), errc::invalid_argument, "histogram of empty label set");
    require(bins >= 1, errc::invalid_argument, "bins must be >= 1");

    double lo = labels.front().raw_return, hi = lo;
    for (const auto& l : labels) {
        lo = std::min(lo, l.raw_return);
        hi = std::max(hi, l.raw_return);
    }

    histogram h;
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    h.counts.assign(bins, 0);

    const double span = hi - lo;
    for (const auto& l : labels) {
        std::size_t b = 0;
        if (span > 0) {
            double t = (l.raw_return - lo) / span * static_cast<double>(bins);
            b = std::min(bins - 1, static_cast<std::size_t>(t));
        }
        ++h.counts[b];
    }
    return h;
}

split_result split_by_date(const std::vector<trading_session>& sessions, ws::date cutoff) {
    split_result out;
    for (const auto& s : sessions)
        (s.day < cutoff ? out.train : out.test).push_back(s);
    require(!out.train.empty(), errc::invalid_argument, "empty train set (cutoff before all data)");
    require(!out.test.empty(), errc::invalid_argument, "empty test set (cutoff after all data)");
    return out;
}

} // namespace ws::ts

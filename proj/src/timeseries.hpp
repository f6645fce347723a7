// Intraday price data: CSV ingest, session cleaning (half-day drop, forward
// fill of short gaps), log-returns, day labels, histograms, date splits.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "calendar.hpp"

namespace ws::ts {

inline constexpr int SESSION_MINUTES = 390;
inline constexpr int MAX_FILL = 20;       // sessions missing more minutes are dropped
inline constexpr int INPUT_MINUTES = 360; // model input window

struct minute_bar {
    ws::date day;
    int minute = 0;  // 0-based index within the session
    double open = 0, high = 0, low = 0, close = 0;
    std::optional<double> volume;

    bool operator==(const minute_bar&) const = default;
};

struct raw_session {
    ws::date day;
    std::vector<minute_bar> bars;  // ordered by minute, may have gaps
};

struct trading_session {
    ws::date day;
    std::vector<minute_bar> bars;  // exactly SESSION_MINUTES after cleaning
    int fill_count = 0;

    // close prices, 1-based minute m in [1, SESSION_MINUTES]
    double close_at(int m) const { return bars[static_cast<std::size_t>(m - 1)].close; }
};

struct csv_schema {
    std::string timestamp = "timestamp";
    std::string open = "open";
    std::string high = "high";
    std::string low = "low";
    std::string close = "close";
    std::string volume = "volume";  // optional column; absent is fine
    int session_open_minute = 9 * 60 + 30;  // minutes after midnight
};

// Grouped by calendar date, ordered by time. Errors on unreadable files,
// unparseable rows (with line number), duplicate timestamps, and rows
// outside the session window.
std::vector<raw_session> load_intraday_csv(const std::string& path, const csv_schema& schema = {});

// Inverse of load: one row per bar, schema column order.
void write_intraday_csv(const std::string& path, const std::vector<trading_session>& sessions,
                        const csv_schema& schema = {});

struct clean_result {
    std::vector<trading_session> sessions;
    std::vector<std::string> report;  // "DROPPED <date> <reason>" / "FLAGGED <date> <reason>"
};

// Weekends and short (half-)days are dropped; gaps of at most MAX_FILL
// minutes are forward-filled from the last prior close. A gap before any
// observation makes the day ineligible and it is dropped.
clean_result clean_sessions(const std::vector<raw_session>& raw);

struct return_series {
    std::vector<double> values;
    ws::date base_date;
};

// values[i] = ln(p[i+1] / p[i]); prices must be positive, length >= 2
return_series log_returns(const std::vector<double>& prices, ws::date base_date = {});

enum class label_scheme { mean_390, y_360_361, y_360_mean, y_360_390, y_mean_mean };

label_scheme parse_label_scheme(const std::string& name);
std::string to_string(label_scheme s);

struct day_label {
    ws::date day;
    int label = 0;  // 1 = Up, 0 = Down (ties -> 0)
    label_scheme scheme = label_scheme::mean_390;
    double raw_return = 0.0;  // log-return of the compared pair
};

day_label make_label(const trading_session& s, label_scheme scheme);

struct histogram {
    std::vector<double> edges;   // bins+1 edges spanning [min, max]
    std::vector<std::size_t> counts;
};

histogram return_histogram(const std::vector<day_label>& labels, std::size_t bins);

struct split_result {
    std::vector<trading_session> train;
    std::vector<trading_session> test;
};

// train strictly before cutoff, test on/after; errors if either side is empty
split_result split_by_date(const std::vector<trading_session>& sessions, ws::date cutoff);

} // namespace ws::ts

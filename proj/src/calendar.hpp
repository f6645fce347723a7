// Minimal civil-calendar date type (no exchange calendars; weekday math only).
#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>

#include "errors.hpp"

namespace ws {

struct date {
    int year  = 1970;
    int month = 1;  // 1..12
    int day   = 1;  // 1..31

    auto operator<=>(const date&) const = default;
};

// days since 1970-01-01 (Howard Hinnant's civil-days algorithm)
inline std::int64_t days_from_civil(const date& d) {
    int y = d.year;
    const int m = d.month;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d.day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline date civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

// 0 = Monday .. 6 = Sunday
inline int weekday(const date& d) {
    std::int64_t z = days_from_civil(d);
    return static_cast<int>(((z % 7) + 10) % 7);
}

inline bool is_weekend(const date& d) { return weekday(d) >= 5; }

inline date next_weekday(date d) {
    std::int64_t z = days_from_civil(d) + 1;
    date n = civil_from_days(z);
    while (is_weekend(n)) n = civil_from_days(++z);
    return n;
}

inline std::string to_string(const date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

inline date parse_date(const std::string& s) {
    int y = 0, m = 0, d = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%d", &y, &m, &d) != 3 || m < 1 || m > 12 || d < 1 || d > 31)
        fail(errc::parse, "bad date '" + s + "' (expected YYYY-MM-DD)");
    return {y, m, d};
}

} // namespace ws

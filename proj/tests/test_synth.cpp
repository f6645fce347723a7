#include <doctest.h>

#include <cmath>

#include "synth.hpp"

using namespace ws;
using namespace ws::ts;

TEST_CASE("synth is deterministic per seed") {
    synth_config cfg{.days = 20, .signal_strength = 0.5};
    auto a = synth_generate(cfg, 7);
    auto b = synth_generate(cfg, 7);
    REQUIRE(a.days.size() == b.days.size());
    for (std::size_t i = 0; i < a.days.size(); ++i) {
        CHECK(a.days[i].session.bars == b.days[i].session.bars);
        CHECK(a.days[i].truth.label == b.days[i].truth.label);
        CHECK(a.days[i].planted_direction == b.days[i].planted_direction);
    }
    auto c = synth_generate(cfg, 8);
    bool all_same = true;
    for (std::size_t i = 0; i < a.days.size(); ++i)
        if (!(a.days[i].session.bars == c.days[i].session.bars)) all_same = false;
    CHECK(!all_same);
}

TEST_CASE("synth sessions are calendar-clean and survive cleaning") {
    auto res = synth_generate({.days = 30, .signal_strength = 0.7}, 11);
    auto cleaned = clean_sessions([&] {
        std::vector<raw_session> raw;
        for (const auto& d : res.days) raw.push_back({d.session.day, d.session.bars});
        return raw;
    }());
    CHECK(cleaned.sessions.size() == res.days.size());
    CHECK(cleaned.report.empty());
    for (const auto& d : res.days) {
        CHECK(!is_weekend(d.session.day));
        REQUIRE(d.session.bars.size() == SESSION_MINUTES);
        for (const auto& b : d.session.bars) {
            CHECK(b.close > 0);
            CHECK(b.high >= std::max(b.open, b.close));
            CHECK(b.low <= std::min(b.open, b.close));
        }
    }
    for (std::size_t i = 1; i < res.days.size(); ++i)
        CHECK(days_from_civil(res.days[i].session.day) >
              days_from_civil(res.days[i - 1].session.day));
}

TEST_CASE("zero signal strength leaves labels near balance") {
    auto res = synth_generate({.days = 2000, .signal_strength = 0.0}, 7);
    std::size_t ones = 0;
    for (const auto& d : res.days) ones += static_cast<std::size_t>(d.truth.label);
    const double freq = static_cast<double>(ones) / 2000.0;
    const double best_constant = std::max(freq, 1.0 - freq);
    CHECK(best_constant <= 0.53);  // within 3 points of a fair coin
}

TEST_CASE("full signal strength makes the planted rule recover labels") {
    auto res = synth_generate({.days = 2000, .signal_strength = 1.0}, 7);
    std::size_t agree = 0;
    for (const auto& d : res.days)
        agree += static_cast<std::size_t>(d.truth.label == (d.planted_direction > 0 ? 1 : 0));
    CHECK(static_cast<double>(agree) / 2000.0 > 0.9);
}

TEST_CASE("synth validates its configuration") {
    CHECK_THROWS_AS((void)synth_generate({.days = 0}, 1), error);
    CHECK_THROWS_AS((void)synth_generate({.days = 5, .signal_strength = 1.5}, 1), error);
    CHECK_THROWS_AS((void)synth_generate({.days = 5, .vol_per_minute = -1.0}, 1), error);
}

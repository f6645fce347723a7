#include <doctest.h>

#include <cmath>
#include <vector>

#include "indicators.hpp"
#include "errors.hpp"

using namespace ws;
using namespace ws::feat;

TEST_CASE("ema: constant series and identity period") {
    auto c = ema(std::vector<double>(50, 42.0), 10);
    CHECK(c.warmup == 9);
    for (std::size_t i = c.warmup; i < 50; ++i) CHECK(c.values[i] == doctest::Approx(42.0));

    std::vector<double> p{3, 1, 4, 1, 5, 9, 2, 6};
    auto one = ema(p, 1);
    CHECK(one.warmup == 0);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(one.values[i] == doctest::Approx(p[i]));
}

TEST_CASE("ema matches the direct recurrence on 1..10") {
    std::vector<double> p{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto e = ema(p, 3);
    CHECK(e.warmup == 2);
    const double alpha = 2.0 / 4.0;
    double expect = (1.0 + 2.0 + 3.0) / 3.0;  // seed: mean of first period
    CHECK(e.values[2] == doctest::Approx(expect).epsilon(1e-12));
    for (std::size_t i = 3; i < p.size(); ++i) {
        expect = alpha * p[i] + (1.0 - alpha) * expect;
        CHECK(e.values[i] == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)ema({1.0, 2.0}, 3), error);
}

TEST_CASE("rsi saturates on monotone series") {
    std::vector<double> up(30), down(30);
    for (int i = 0; i < 30; ++i) {
        up[static_cast<std::size_t>(i)] = 100.0 + i;
        down[static_cast<std::size_t>(i)] = 100.0 - i;
    }
    auto r_up = rsi(up, 14);
    auto r_down = rsi(down, 14);
    CHECK(r_up.warmup == 14);
    for (std::size_t i = r_up.warmup; i < 30; ++i) {
        CHECK(r_up.values[i] == doctest::Approx(100.0));
        CHECK(r_down.values[i] == doctest::Approx(0.0));
    }
    CHECK_THROWS_AS((void)rsi({1.0, 2.0}, 2), error);
}

TEST_CASE("rsi with period 2 on alternating +-1 reaches the Wilder limit cycle") {
    // Wilder smoothing with p = 2 halves the running averages each step, so
    // after a gain step avgGain -> 2/3, avgLoss -> 1/3 (and mirrored after a
    // loss step): RSI alternates between 200/3 and 100/3. The seed point
    // itself is exactly 50, and the cycle mean stays 50.
    std::vector<double> p(120);
    p[0] = 100.0;
    for (std::size_t i = 1; i < p.size(); ++i) p[i] = (i % 2) ? 101.0 : 100.0;
    auto r = rsi(p, 2);
    CHECK(r.values[2] == doctest::Approx(50.0).epsilon(1e-12));
    // tail of the sequence alternates around 50
    for (std::size_t i = 100; i < 120; ++i) {
        const double expect = (i % 2) ? 200.0 / 3.0 : 100.0 / 3.0;
        CHECK(r.values[i] == doctest::Approx(expect).epsilon(1e-9));
    }
    CHECK((r.values[100] + r.values[101]) / 2.0 == doctest::Approx(50.0).epsilon(1e-9));
}

TEST_CASE("rsi values stay in [0, 100]") {
    std::vector<double> p(200);
    double v = 100.0;
    for (auto& x : p) {
        v *= 1.0 + 0.01 * std::sin(static_cast<double>(&x - p.data()));
        x = v;
    }
    auto r = rsi(p, 14);
    for (std::size_t i = r.warmup; i < p.size(); ++i) {
        CHECK(r.values[i] >= 0.0);
        CHECK(r.values[i] <= 100.0);
    }
}

TEST_CASE("moving average") {
    auto c = ma(std::vector<double>(40, 7.0), 10);
    CHECK(c.warmup == 9);
    for (std::size_t i = c.warmup; i < 40; ++i) CHECK(c.values[i] == doctest::Approx(7.0));

    std::vector<double> p{1, 2, 3, 4, 5};
    auto m = ma(p, 2);
    CHECK(m.values[1] == doctest::Approx(1.5));
    CHECK(m.values[4] == doctest::Approx(4.5));
    CHECK_THROWS_AS((void)ma({1.0}, 2), error);
}

TEST_CASE("rolling correlation extremes") {
    std::vector<double> x(50);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = std::sin(0.3 * static_cast<double>(i)) + 0.01 * static_cast<double>(i);
    std::vector<double> nx(50);
    for (std::size_t i = 0; i < x.size(); ++i) nx[i] = -x[i];

    auto self = correl(x, x, 10);
    auto anti = correl(x, nx, 10);
    CHECK(self.warmup == 9);
    for (std::size_t i = self.warmup; i < x.size(); ++i) {
        CHECK(self.values[i] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(anti.values[i] == doctest::Approx(-1.0).epsilon(1e-9));
    }

    // degenerate window (zero variance) is defined as zero
    auto flat = correl(std::vector<double>(30, 5.0), x.size() >= 30
                                                        ? std::vector<double>(x.begin(),
                                                                              x.begin() + 30)
                                                        : x,
                       5);
    for (std::size_t i = flat.warmup; i < 30; ++i) CHECK(flat.values[i] == 0.0);

    CHECK_THROWS_AS((void)correl(x, nx, 1), error);
    CHECK_THROWS_AS((void)correl(x, std::vector<double>(10, 1.0), 5), error);
}

TEST_CASE("warmup is the first defined index for every indicator") {
    std::vector<double> p(100);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = 100.0 + std::sin(0.2 * i);
    CHECK(ema(p, 30).warmup == 29);
    CHECK(rsi(p, 14).warmup == 14);
    CHECK(ma(p, 60).warmup == 59);
    CHECK(correl(p, p, 30).warmup == 29);
    CHECK(ema(p, 30).defined().size() == 100 - 29);
}

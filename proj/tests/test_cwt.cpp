#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "cwt.hpp"
#include "rng.hpp"

using namespace ws;
using namespace ws::cwt;

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

std::vector<double> random_signal(std::size_t n, std::uint64_t seed) {
    rng gen(seed);
    std::vector<double> x(n);
    for (auto& v : x) v = gen.normal();
    return x;
}

std::vector<double> cosine(std::size_t n, double cycles_per_sample) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::cos(2.0 * PI * cycles_per_sample * static_cast<double>(i));
    return x;
}

double rel_max_diff(const coefficients& a, const coefficients& b) {
    REQUIRE(a.w.size() == b.w.size());
    double denom = 0.0, num = 0.0;
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        num = std::max(num, std::abs(a.w[i] - b.w[i]));
        denom = std::max(denom, std::abs(b.w[i]));
    }
    return num / denom;
}

} // namespace

TEST_CASE("morlet value at t = 0 and modulus envelope") {
    auto m = make_mother("morlet", 6.0);
    auto v0 = m.value(0.0);
    CHECK(v0.real() == doctest::Approx(std::pow(PI, -0.25)).epsilon(1e-12));
    CHECK(v0.imag() == doctest::Approx(0.0).epsilon(1e-12));
    for (double t : {-3.7, -1.0, 0.25, 2.0}) {
        double expected = std::pow(PI, -0.25) * std::exp(-0.5 * t * t);
        CHECK(std::abs(m.value(t)) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("morlet integral vanishes to the admissibility correction") {
    // Simpson quadrature over [-8, 8]
    auto m = make_mother("morlet", 6.0);
    const int steps = 16000;  // even
    const double h = 16.0 / steps;
    std::complex<double> acc = m.value(-8.0) + m.value(8.0);
    for (int i = 1; i < steps; ++i)
        acc += m.value(-8.0 + h * i) * ((i % 2) ? 4.0 : 2.0);
    acc *= h / 3.0;
    // exact integral is pi^{-1/4} sqrt(2 pi) e^{-omega0^2/2}
    const double residual = std::pow(PI, -0.25) * std::sqrt(2.0 * PI) * std::exp(-18.0);
    CHECK(std::abs(acc) < 10.0 * residual + 1e-12);
    CHECK(std::abs(acc) > 0.1 * residual);
}

TEST_CASE("gaussian1 has exactly zero mean and unit energy") {
    auto g = make_mother("gaussian1", 0.0);
    const int steps = 16000;
    const double h = 16.0 / steps;
    double mean = (g.value(-8.0) + g.value(8.0)).real();
    double energy = std::norm(g.value(-8.0)) + std::norm(g.value(8.0));
    for (int i = 1; i < steps; ++i) {
        double w = (i % 2) ? 4.0 : 2.0;
        auto v = g.value(-8.0 + h * i);
        mean += w * v.real();
        energy += w * std::norm(v);
    }
    mean *= h / 3.0;
    energy *= h / 3.0;
    CHECK(std::fabs(mean) < 1e-12);  // odd function
    CHECK(energy == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("morlet admissibility bound enforced") {
    CHECK_THROWS_AS((void)make_mother("morlet", 4.0), error);
    CHECK_THROWS_AS((void)make_mother("mexican", 6.0), error);
}

TEST_CASE("equivalent frequency follows the proportionality constant") {
    auto m = make_mother("morlet", 6.0);
    CHECK(equivalent_frequency(1.0, 1.0, m) == doctest::Approx(6.0 / (2.0 * PI)).epsilon(1e-12));
    CHECK(equivalent_frequency(2.0, 1.0, m) ==
          doctest::Approx(0.5 * equivalent_frequency(1.0, 1.0, m)).epsilon(1e-12));
    CHECK(equivalent_frequency(2.0, 0.5, m) ==
          doctest::Approx(equivalent_frequency(1.0, 1.0, m)).epsilon(1e-12));
    CHECK_THROWS_AS((void)equivalent_frequency(0.0, 1.0, m), error);
    CHECK_THROWS_AS((void)equivalent_frequency(1.0, -1.0, m), error);
}

TEST_CASE("morlet center frequency matches the FFT peak of the sampled wavelet") {
    auto m = make_mother("morlet", 6.0);
    // sample psi over [-64, 64) at dt = 0.125, locate the spectrum peak by
    // direct DFT scan
    const std::size_t n = 1024;
    const double dt = 0.125;
    std::vector<std::complex<double>> psi(n);
    for (std::size_t i = 0; i < n; ++i)
        psi[i] = m.value((static_cast<double>(i) - 512.0) * dt);
    double best_f = 0.0, best_mag = -1.0;
    for (int k = 0; k < 512; ++k) {
        double f = static_cast<double>(k) / (static_cast<double>(n) * dt);
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double ph = -2.0 * PI * f * static_cast<double>(i) * dt;
            acc += psi[i] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        if (std::abs(acc) > best_mag) {
            best_mag = std::abs(acc);
            best_f = f;
        }
    }
    CHECK(best_f == doctest::Approx(m.center_frequency()).epsilon(0.02));
}

TEST_CASE("default grid spans up to a quarter of the series") {
    auto g = default_grid(360, 1.0);
    CHECK(g.s0 == doctest::Approx(2.0));
    CHECK(g.count >= 40);
    CHECK(g.scale(g.count - 1) <= 90.0 + 1e-9);
    CHECK(g.scale(g.count) > 90.0);  // one more step would overshoot
    auto s = g.scales();
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);
}

TEST_CASE("cwt of zeros is zero; short input errors") {
    auto m = make_mother("morlet", 6.0);
    auto g = default_grid(64, 1.0);
    auto w = transform(std::vector<double>(64, 0.0), m, g, 1.0);
    for (const auto& v : w.w) CHECK(std::abs(v) == 0.0);
    CHECK_THROWS_AS((void)transform({1.0, 2.0, 3.0}, m, g, 1.0), error);
}

TEST_CASE("cwt linearity") {
    auto m = make_mother("morlet", 6.0);
    auto g = default_grid(128, 1.0);
    auto x = random_signal(128, 21), y = random_signal(128, 22);
    const double a = 0.8, b = -1.9;
    std::vector<double> mix(128);
    for (std::size_t i = 0; i < 128; ++i) mix[i] = a * x[i] + b * y[i];
    auto wx = transform(x, m, g, 1.0);
    auto wy = transform(y, m, g, 1.0);
    auto wm = transform(mix, m, g, 1.0);
    for (std::size_t i = 0; i < wm.w.size(); ++i)
        CHECK(std::abs(wm.w[i] - (a * wx.w[i] + b * wy.w[i])) < 1e-10);
}

TEST_CASE("dual-path equivalence, both mothers and paddings") {
    for (const char* mother : {"morlet", "gaussian1"}) {
        auto m = make_mother(mother, 6.0);
        for (auto pad : {padding::zero, padding::periodic}) {
            auto x = random_signal(200, 31);
            auto g = default_grid(200, 1.0);
            auto fast = transform(x, m, g, 1.0, pad, path::fast);
            auto direct = transform(x, m, g, 1.0, pad, path::direct);
            CHECK(rel_max_diff(fast, direct) < 1e-8);
        }
    }
}

TEST_CASE("pure tones localize at the equivalent-frequency scale") {
    auto m = make_mother("morlet", 6.0);
    const std::size_t n = 512;
    auto grid = default_grid(n, 1.0);
    auto coi = cone_of_influence(n, 1.0, m);
    for (double f : {1.0 / 16.0, 1.0 / 32.0, 1.0 / 64.0}) {
        auto w = transform(cosine(n, f), m, grid, 1.0);
        auto p = power(w);
        int best_row = -1;
        double best = -1.0;
        for (int r = 0; r < grid.count; ++r) {
            const double s = grid.scale(r);
            double acc = 0.0;
            std::size_t cnt = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (coi[c] >= s) {
                    acc += p[static_cast<std::size_t>(r) * n + c];
                    ++cnt;
                }
            }
            if (cnt == 0) continue;
            acc /= static_cast<double>(cnt);
            if (acc > best) {
                best = acc;
                best_row = r;
            }
        }
        REQUIRE(best_row >= 0);
        const double expected = m.center_frequency() / f;
        const double step = std::fabs(std::log2(grid.scale(best_row)) - std::log2(expected)) /
                            grid.dj;
        CHECK(step <= 1.0 + 1e-9);
    }
}

TEST_CASE("translation covariance in periodic padding") {
    auto m = make_mother("morlet", 6.0);
    const std::size_t n = 128, shift = 17;
    auto x = random_signal(n, 41);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[(i + shift) % n] = x[i];
    auto g = default_grid(n, 1.0);
    auto w = transform(x, m, g, 1.0, padding::periodic);
    auto wshift = transform(xs, m, g, 1.0, padding::periodic);
    double dev = 0.0;
    for (std::size_t r = 0; r < w.rows; ++r)
        for (std::size_t c = 0; c < n; ++c)
            dev = std::max(dev, std::abs(wshift.at(r, (c + shift) % n) - w.at(r, c)));
    CHECK(dev < 1e-8);
}

TEST_CASE("power is the squared modulus") {
    coefficients w;
    w.rows = 1;
    w.cols = 2;
    w.w = {{3.0, 4.0}, {0.0, 0.0}};
    auto p = power(w);
    CHECK(p[0] == doctest::Approx(25.0).epsilon(1e-15));
    CHECK(p[1] == 0.0);
}

TEST_CASE("cone of influence shape") {
    auto m = make_mother("morlet", 6.0);
    const std::size_t n = 391;
    auto coi = cone_of_influence(n, 1.0, m);
    CHECK(coi[0] == 0.0);
    CHECK(coi[n - 1] == 0.0);
    CHECK(coi[195] == doctest::Approx(195.0 / std::sqrt(2.0)).epsilon(1e-12));
    for (std::size_t i = 1; i <= n / 2; ++i) CHECK(coi[i] >= coi[i - 1]);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(coi[i] == doctest::Approx(coi[n - 1 - i]).epsilon(1e-12));
}

TEST_CASE("edge impulse energy at the trusted-scale boundary") {
    auto m = make_mother("morlet", 6.0);
    const std::size_t n = 256;
    std::vector<double> x(n, 0.0);
    x[0] = 1.0;
    auto coi = cone_of_influence(n, 1.0, m);
    for (std::size_t idx : {16, 40, 90}) {
        scale_grid g;
        g.s0 = coi[idx];  // exactly the trusted-scale boundary at this index
        g.dj = 0.125;
        g.count = 1;
        auto w = transform(x, m, g, 1.0, padding::zero, path::direct);
        const double at_idx = std::abs(w.at(0, idx));
        const double at_edge = std::abs(w.at(0, 0));
        // e-folding: the impulse response decays to e^-1 of its edge value
        CHECK(at_idx / at_edge == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
        // well below the boundary scale the edge no longer reaches idx
        scale_grid fine = g;
        fine.s0 = coi[idx] / 4.0;
        auto wf = transform(x, m, fine, 1.0, padding::zero, path::direct);
        CHECK(std::abs(wf.at(0, idx)) / std::abs(wf.at(0, 0)) < 0.02);
    }
}

TEST_CASE("render: constant power maps to mid-gray") {
    scalogram sg;
    sg.rows = 9;
    sg.cols = 17;
    sg.power.assign(sg.rows * sg.cols, 2.5);
    sg.grid = {1.0, 0.125, 9};
    sg.coi.assign(sg.cols, 1e9);
    auto img = render(sg, {16, 16, coi_mask::none});
    for (auto px : img.pixels) CHECK(px == 128);
}

TEST_CASE("render: unique maximum hits 255 exactly once on an aligned grid") {
    scalogram sg;
    sg.rows = 9;
    sg.cols = 17;
    sg.power.assign(sg.rows * sg.cols, 1.0);
    sg.power[4 * 17 + 8] = 1e6;
    sg.grid = {1.0, 0.125, 9};
    sg.coi.assign(sg.cols, 1e9);
    image_spec spec{17, 33, coi_mask::none};  // every even pixel aligns with a cell
    auto img = render(sg, spec);
    int count255 = 0;
    for (auto px : img.pixels) count255 += px == 255;
    CHECK(count255 == 1);
    CHECK(img.pixels[8 * 33 + 16] == 255);
    auto again = render(sg, spec);
    CHECK(img.pixels == again.pixels);
}

TEST_CASE("render is monotone under shared extremes") {
    rng gen(55);
    scalogram b;
    b.rows = 8;
    b.cols = 16;
    b.power.resize(b.rows * b.cols);
    for (auto& v : b.power) v = std::exp(gen.normal());
    b.grid = {1.0, 0.125, 8};
    b.coi.assign(b.cols, 1e9);
    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 1; i < b.power.size(); ++i) {
        if (b.power[i] < b.power[imin]) imin = i;
        if (b.power[i] > b.power[imax]) imax = i;
    }
    scalogram a = b;
    for (std::size_t i = 0; i < a.power.size(); ++i) {
        if (i == imin || i == imax) continue;
        a.power[i] += 0.5 * (b.power[imax] - a.power[i]) * gen.uniform();
    }
    image_spec spec{32, 32, coi_mask::none};
    auto ia = render(a, spec), ib = render(b, spec);
    for (std::size_t i = 0; i < ia.pixels.size(); ++i)
        CHECK(static_cast<int>(ia.pixels[i]) + 1 >= static_cast<int>(ib.pixels[i]));
}

TEST_CASE("COI masking zeroes or dims untrusted pixels") {
    auto m = make_mother("morlet", 6.0);
    auto x = random_signal(128, 61);
    auto g = default_grid(128, 1.0);
    auto sg = make_scalogram(x, m, g, 1.0, "test");
    auto plain = render(sg, {32, 32, coi_mask::none});
    auto zeroed = render(sg, {32, 32, coi_mask::zero});
    auto dimmed = render(sg, {32, 32, coi_mask::dim});
    // the largest scale at the series edge is far outside the cone
    CHECK(zeroed.pixels[31 * 32 + 0] == 0);
    CHECK(dimmed.pixels[31 * 32 + 0] == plain.pixels[31 * 32 + 0] / 2);
    // small scales at the series centre are trusted
    CHECK(zeroed.pixels[0 * 32 + 16] == plain.pixels[0 * 32 + 16]);
}

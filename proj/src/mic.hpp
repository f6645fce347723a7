// Maximal information coefficient via equal-frequency grid search:
// score = max over grid shapes (cx x cy, cx*cy <= n^B_exponent) of
// I[X;Y] / log2(min(cx, cy)), clamped to [0, 1].
#pragma once

#include <string>
#include <vector>

namespace ws::feat {

struct mic_score {
    std::string name;
    double score = 0.0;
    int grid_bound = 0;  // B(n)
};

mic_score mic(const std::vector<double>& x, const std::vector<double>& y,
              double b_exponent = 0.6);

// descending score, ties broken by name
std::vector<mic_score> select_top_k(
    const std::vector<std::pair<std::string, std::vector<double>>>& candidates,
    const std::vector<double>& target, std::size_t k, double b_exponent = 0.6);

} // namespace ws::feat

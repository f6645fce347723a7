// Confusion matrices, derived classification metrics, and the seeded
// fair-coin baseline. Zero-denominator ratios are reported as 0 with an
// explicit degenerate flag so reports stay total.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ws::eval {

struct confusion {
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
    std::uint64_t total() const { return tp + fp + fn + tn; }
};

confusion make_confusion(const std::vector<int>& predicted, const std::vector<int>& actual);

struct report {
    confusion counts;
    double accuracy = 0, tpr = 0, tnr = 0, f1 = 0;
    bool tpr_degenerate = false, tnr_degenerate = false, f1_degenerate = false;
    std::uint64_t n_test = 0;
    bool has_loss = false;
    double loss = 0.0;
    std::string model;       // run metadata
    std::string config_hash;
    std::uint64_t seed = 0;
};

// accuracy = (tp+tn)/total, tpr = tp/(tp+fn), tnr = tn/(tn+fp),
// f1 = 2tp/(2tp+fp+fn)
report metrics(const confusion& c);

// i.i.d. fair-coin predictions, one per label, deterministic per seed
std::vector<int> random_baseline(const std::vector<int>& labels, std::uint64_t seed);

// "key: value" lines in fixed order; floats printed with 6 decimals
std::string format_report(const report& r);

} // namespace ws::eval

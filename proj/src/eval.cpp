#include "eval.hpp"

#include <cstdio>

#include "errors.hpp"
#include "rng.hpp"

namespace ws::eval {

confusion make_confusion(const std::vector<int>& predicted, const std::vector<int>& actual) {
    require(predicted.size() == actual.size(), errc::invalid_argument,
            "confusion: prediction count " + std::to_string(predicted.size()) +
                " != label count " + std::to_string(actual.size()));
    require(!predicted.empty(), errc::invalid_argument, "confusion: empty input");
    confusion c;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const int p = predicted[i], a = actual[i];
        require((p == 0 || p == 1) && (a == 0 || a == 1), errc::invalid_argument,
                "confusion: values must be binary");
        if (p == 1 && a == 1) ++c.tp;
        else if (p == 1 && a == 0) ++c.fp;
        else if (p == 0 && a == 1) ++c.fn;
        else ++c.tn;
    }
    return c;
}

report metrics(const confusion& c) {
    require(c.total() > 0, errc::invalid_argument, "metrics on empty confusion");
    report r;
    r.counts = c;
    r.n_test = c.total();
    r.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());

    const std::uint64_t pos = c.tp + c.fn, neg = c.tn + c.fp, f1d = 2 * c.tp + c.fp + c.fn;
    if (pos > 0) r.tpr = static_cast<double>(c.tp) / static_cast<double>(pos);
    else r.tpr_degenerate = true;
    if (neg > 0) r.tnr = static_cast<double>(c.tn) / static_cast<double>(neg);
    else r.tnr_degenerate = true;
    if (f1d > 0) r.f1 = static_cast<double>(2 * c.tp) / static_cast<double>(f1d);
    else r.f1_degenerate = true;
    return r;
}

std::vector<int> random_baseline(const std::vector<int>& labels, std::uint64_t seed) {
    require(!labels.empty(), errc::invalid_argument, "random baseline on empty labels");
    rng gen(seed);
    std::vector<int> out(labels.size());
    for (auto& v : out) v = gen.coin() ? 1 : 0;
    return out;
}

std::string format_report(const report& r) {
    std::string out;
    char buf[96];
    auto line = [&](const char* k, const std::string& v) {
        out += k;
        out += ": ";
        out += v;
        out += '\n';
    };
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    if (!r.model.empty()) line("Model", r.model);
    line("N", std::to_string(r.n_test));
    line("TP", std::to_string(r.counts.tp));
    line("FP", std::to_string(r.counts.fp));
    line("FN", std::to_string(r.counts.fn));
    line("TN", std::to_string(r.counts.tn));
    if (r.has_loss) line("Loss", num(r.loss));
    else line("Loss", "/");
    line("Accuracy", num(r.accuracy));
    line("TPR", num(r.tpr) + (r.tpr_degenerate ? " (degenerate)" : ""));
    line("TNR", num(r.tnr) + (r.tnr_degenerate ? " (degenerate)" : ""));
    line("F1 score", num(r.f1) + (r.f1_degenerate ? " (degenerate)" : ""));
    return out;
}

} // namespace ws::eval

#include "pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "eval.hpp"
#include "pngio.hpp"
#include "tensor.hpp"

namespace fs = std::filesystem;

namespace ws::pipeline {

namespace {

void parallel_days(std::size_t count, int threads, const std::function<void(std::size_t)>& work) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

fs::path ensure_dir(const fs::path& p) {
    std::error_code ec;
    fs::create_directories(p, ec);
    require(!ec, errc::io, "cannot create directory " + p.string());
    return p;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::trunc);
    require(f.good(), errc::io, "cannot write " + p.string());
    f << text;
    require(f.good(), errc::io, "write failed: " + p.string());
}

std::string read_text(const fs::path& p) {
    std::ifstream f(p);
    require(f.good(), errc::io, "cannot open " + p.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path sessions_csv_path(const config& cfg) {
    if (cfg.get("data.source") == "csv") {
        const std::string p = cfg.get("data.csv_path");
        require(!p.empty(), errc::invalid_argument, "data.source=csv but data.csv_path is empty");
        return p;
    }
    return fs::path(cfg.out_dir()) / "sessions.csv";
}

std::vector<ts::trading_session> load_clean_sessions(const config& cfg) {
    fs::path p = fs::path(cfg.out_dir()) / "clean.csv";
    require(fs::exists(p), errc::io,
            p.string() + " not found (run the clean stage first)");
    auto raw = ts::load_intraday_csv(p.string());
    auto cleaned = ts::clean_sessions(raw);
    return std::move(cleaned.sessions);
}

// the per-day denoised log-return series of the close channel
std::vector<double> denoised_close_returns(const ts::trading_session& s, const config& cfg) {
    auto series = feat::indicator_values(s, "close", cfg.features().ind);
    auto r = ts::log_returns(series, s.day);
    return denoise::denoise(r.values, cfg.den());
}

std::string run_synth(const config& cfg) {
    require(cfg.get("data.source") == "synth", errc::invalid_argument,
            "synth stage needs data.source=synth");
    auto out = ensure_dir(cfg.out_dir());
    auto result = ts::synth_generate(cfg.synth(), cfg.stage_seed("synth"));

    ts::write_intraday_csv((out / "sessions.csv").string(), result.sessions());

    std::string truth = "date label raw_return planted_direction\n";
    char buf[128];
    for (const auto& d : result.days) {
        std::snprintf(buf, sizeof buf, "%s %d %.12g %+d\n", ws::to_string(d.truth.day).c_str(),
                      d.truth.label, d.truth.raw_return, d.planted_direction);
        truth += buf;
    }
    write_text(out / "truth_labels.txt", truth);

    return "synth: wrote " + std::to_string(result.days.size()) + " sessions to " +
           (out / "sessions.csv").string();
}

std::string run_clean(const config& cfg) {
    auto out = ensure_dir(cfg.out_dir());
    auto raw = ts::load_intraday_csv(sessions_csv_path(cfg).string());
    auto cleaned = ts::clean_sessions(raw);

    ts::write_intraday_csv((out / "clean.csv").string(), cleaned.sessions);
    std::string rep;
    for (const auto& line : cleaned.report) rep += line + "\n";
    write_text(out / "rejections.txt", rep);

    return "clean: kept " + std::to_string(cleaned.sessions.size()) + " of " +
           std::to_string(raw.size()) + " sessions (" + std::to_string(cleaned.report.size()) +
           " report lines)";
}

std::string run_denoise(const config& cfg) {
    auto out = ensure_dir(fs::path(cfg.out_dir()) / "denoised");
    auto sessions = load_clean_sessions(cfg);
    require(!sessions.empty(), errc::data, "no sessions to denoise");

    const auto den_cfg = cfg.den();
    const auto wavelet = dwt::wavelet_filters(den_cfg.wavelet);
    for (const auto& s : sessions) {
        auto series = feat::indicator_values(s, "close", cfg.features().ind);
        auto returns = ts::log_returns(series, s.day).values;
        auto den = denoise::denoise(returns, den_cfg);
        const std::string stem = ws::to_string(s.day) + "_close";
        write_tensor_file((out / (stem + ".wstf")).string(),
                          tensor::from_f64(den, {static_cast<std::uint32_t>(den.size())}));

        // coefficient dump, one array per level
        auto dec = dwt::decompose(returns, wavelet, den_cfg.levels, den_cfg.mode);
        write_tensor_file(
            (out / (stem + "_a" + std::to_string(den_cfg.levels) + ".wstf")).string(),
            tensor::from_f64(dec.approx, {static_cast<std::uint32_t>(dec.approx.size())}));
        for (int j = 0; j < dec.levels(); ++j) {
            const auto& d = dec.details[static_cast<std::size_t>(j)];
            write_tensor_file(
                (out / (stem + "_d" + std::to_string(j + 1) + ".wstf")).string(),
                tensor::from_f64(d, {static_cast<std::uint32_t>(d.size())}));
        }
    }
    return "denoise: wrote series + coefficient dumps for " +
           std::to_string(sessions.size()) + " sessions to " + out.string();
}

std::string run_scalogram(const config& cfg) {
    auto out = ensure_dir(fs::path(cfg.out_dir()) / "scalograms");
    auto sessions = load_clean_sessions(cfg);
    require(!sessions.empty(), errc::data, "no sessions for scalograms");

    const auto fcfg = cfg.features();
    const auto mother = cwt::make_mother("morlet", fcfg.cwt.omega0);
    for (const auto& s : sessions) {
        auto den = denoised_close_returns(s, cfg);
        auto grid = cwt::default_grid(den.size(), fcfg.cwt.dt, fcfg.cwt.dj);
        const std::string stem = ws::to_string(s.day) + "_close";
        auto sg = cwt::make_scalogram(den, mother, grid, fcfg.cwt.dt, stem);
        write_tensor_file((out / (stem + ".wstf")).string(),
                          tensor::from_f64(sg.power, {static_cast<std::uint32_t>(sg.rows),
                                                      static_cast<std::uint32_t>(sg.cols)}));
        auto img = cwt::render(sg, fcfg.image);
        write_gray_png((out / (stem + ".png")).string(), img.pixels.data(), img.width,
                       img.height);
    }
    return "scalogram: wrote " + std::to_string(sessions.size()) + " scalograms to " +
           out.string();
}

std::string run_features(const config& cfg) {
    auto out = ensure_dir(fs::path(cfg.out_dir()) / "features");
    auto sessions = load_clean_sessions(cfg);
    require(!sessions.empty(), errc::data, "no sessions for feature building");

    const auto fcfg = cfg.features();
    std::vector<feat::feature_tensor> tensors(sessions.size());
    parallel_days(sessions.size(), static_cast<int>(cfg.get_int("run.threads")),
                  [&](std::size_t i) { tensors[i] = feat::build_feature_tensor(sessions[i], fcfg); });

    std::string meta = "channels " + cfg.get("features.indicators") + "\n";
    meta += "image " + std::to_string(fcfg.image.height) + "x" +
            std::to_string(fcfg.image.width) + "\n";
    meta += "scheme " + ts::to_string(fcfg.scheme) + "\n";
    char buf[128];
    for (const auto& t : tensors) {
        write_tensor_file((out / (ws::to_string(t.day) + ".wstf")).string(),
                          tensor::from_f32(t.data, {static_cast<std::uint32_t>(t.channels),
                                                    static_cast<std::uint32_t>(t.height),
                                                    static_cast<std::uint32_t>(t.width)}));
        std::snprintf(buf, sizeof buf, "%s %d %.12g\n", ws::to_string(t.day).c_str(), t.label,
                      t.raw_return);
        meta += buf;
    }
    write_text(out / "meta.txt", meta);
    return "features: wrote " + std::to_string(tensors.size()) + " tensors to " + out.string();
}

struct feature_set {
    cnn::shape3 shape;
    std::vector<ws::date> dates;
    cnn::examples all;
};

feature_set load_features(const config& cfg) {
    fs::path dir = fs::path(cfg.out_dir()) / "features";
    fs::path meta_path = dir / "meta.txt";
    require(fs::exists(meta_path), errc::io,
            meta_path.string() + " not found (run the features stage first)");

    feature_set out;
    std::istringstream meta(read_text(meta_path));
    std::string line;
    std::vector<std::pair<ws::date, int>> listed;
    while (std::getline(meta, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "channels" || head == "image" || head == "scheme") continue;
        int label = -1;
        double raw = 0.0;
        ls >> label >> raw;
        require(label == 0 || label == 1, errc::parse, "meta.txt: bad label line: " + line);
        listed.emplace_back(parse_date(head), label);
    }
    require(!listed.empty(), errc::data, "meta.txt lists no days");

    std::size_t tensor_files = 0;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".wstf") ++tensor_files;
    require(tensor_files == listed.size(), errc::data,
            "tensor count " + std::to_string(tensor_files) + " != label count " +
                std::to_string(listed.size()));

    for (const auto& [day, label] : listed) {
        auto t = read_tensor_file((dir / (ws::to_string(day) + ".wstf")).string());
        require(t.rank() == 3, errc::data, "feature tensor must be rank 3");
        cnn::shape3 s{static_cast<int>(t.dims()[0]), static_cast<int>(t.dims()[1]),
                      static_cast<int>(t.dims()[2])};
        if (out.dates.empty()) {
            out.shape = s;
            out.all.shape = s;
        }
        require(s == out.shape, errc::data, "inconsistent tensor shapes in features dir");
        auto v = t.as_f32();
        out.all.data.insert(out.all.data.end(), v.begin(), v.end());
        out.all.labels.push_back(label);
        out.dates.push_back(day);
    }
    return out;
}

ws::date split_cutoff(const config& cfg, const std::vector<ws::date>& dates) {
    const std::string cut = cfg.get("split.cutoff");
    if (!cut.empty()) return parse_date(cut);
    const auto test_days = cfg.get_int("split.test_days");
    require(test_days > 0, errc::invalid_argument,
            "set split.cutoff or a positive split.test_days");
    require(static_cast<std::size_t>(test_days) < dates.size(), errc::invalid_argument,
            "split.test_days >= available days");
    return dates[dates.size() - static_cast<std::size_t>(test_days)];
}

cnn::examples take(const cnn::examples& from, std::size_t begin, std::size_t end) {
    cnn::examples out;
    out.shape = from.shape;
    const std::size_t sz = static_cast<std::size_t>(from.shape.size());
    out.data.assign(from.data.begin() + static_cast<std::ptrdiff_t>(begin * sz),
                    from.data.begin() + static_cast<std::ptrdiff_t>(end * sz));
    out.labels.assign(from.labels.begin() + static_cast<std::ptrdiff_t>(begin),
                      from.labels.begin() + static_cast<std::ptrdiff_t>(end));
    return out;
}

std::string model_dir(const config& cfg) { return (fs::path(cfg.out_dir()) / "model").string(); }

void save_model(const std::string& dir, const cnn::network& net, const config& cfg) {
    ensure_dir(dir);
    std::string manifest = "wavestate-model v1\n";
    manifest += "kind: " + cfg.get("net.kind") + "\n";
    manifest += "input: " + std::to_string(net.input.c) + "x" + std::to_string(net.input.h) +
                "x" + std::to_string(net.input.w) + "\n";
    manifest += "seed: " + std::to_string(net.seed) + "\n";
    manifest += "config_hash: " + cfg.hash() + "\n";
    manifest += "layers:\n";
    for (const auto& l : net.layers) manifest += "  " + l.describe() + "\n";

    int file_idx = 0;
    std::string params_block;
    for (std::size_t li = 0; li < net.layers.size(); ++li) {
        const auto& p = net.params[li];
        if (p.weight.empty()) continue;
        char name[32];
        std::snprintf(name, sizeof name, "p%03d", file_idx++);
        write_tensor_file((fs::path(dir) / (std::string(name) + ".wstf")).string(),
                          tensor::from_f32(p.weight,
                                           {static_cast<std::uint32_t>(p.weight.size())}));
        params_block += "  " + std::string(name) + " layer=" + std::to_string(li) + " weight\n";
        std::snprintf(name, sizeof name, "p%03d", file_idx++);
        write_tensor_file((fs::path(dir) / (std::string(name) + ".wstf")).string(),
                          tensor::from_f32(p.bias, {static_cast<std::uint32_t>(p.bias.size())}));
        params_block += "  " + std::string(name) + " layer=" + std::to_string(li) + " bias\n";
    }
    manifest += "params: " + std::to_string(file_idx) + "\n" + params_block;
    write_text(fs::path(dir) / "manifest.txt", manifest);
}

cnn::network load_model(const std::string& dir) {
    std::istringstream meta(read_text(fs::path(dir) / "manifest.txt"));
    std::string line;
    std::getline(meta, line);
    require(line == "wavestate-model v1", errc::parse, "bad model manifest header");
    std::string kind;
    cnn::shape3 input{};
    std::uint64_t seed = 0;
    while (std::getline(meta, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "kind:") ls >> kind;
        else if (key == "input:") {
            char x;
            ls >> input.c >> x >> input.h >> x >> input.w;
        } else if (key == "seed:") ls >> seed;
    }
    require(!kind.empty() && input.size() > 0, errc::parse, "incomplete model manifest");

    auto net = cnn::build_reference_net(kind, input, seed);
    int file_idx = 0;
    for (std::size_t li = 0; li < net.layers.size(); ++li) {
        auto& p = net.params[li];
        if (p.weight.empty()) continue;
        char name[32];
        std::snprintf(name, sizeof name, "p%03d.wstf", file_idx++);
        auto wt = read_tensor_file((fs::path(dir) / name).string());
        require(wt.size() == p.weight.size(), errc::data, "model weight size mismatch");
        p.weight = wt.as_f32();
        std::snprintf(name, sizeof name, "p%03d.wstf", file_idx++);
        auto bt = read_tensor_file((fs::path(dir) / name).string());
        require(bt.size() == p.bias.size(), errc::data, "model bias size mismatch");
        p.bias = bt.as_f32();
    }
    return net;
}

std::string run_train(const config& cfg) {
    auto features = load_features(cfg);
    const ws::date cutoff = split_cutoff(cfg, features.dates);

    std::size_t n_train = 0;
    while (n_train < features.dates.size() && features.dates[n_train] < cutoff) ++n_train;
    require(n_train > 0, errc::invalid_argument, "empty train set (cutoff before all data)");
    require(n_train < features.dates.size(), errc::invalid_argument,
            "empty test set (cutoff after all data)");

    const double val_fraction = cfg.get_double("train.val_fraction");
    require(val_fraction >= 0.0 && val_fraction < 1.0, errc::invalid_argument,
            "train.val_fraction must be in [0, 1)");
    std::size_t n_val = static_cast<std::size_t>(std::llround(
        static_cast<double>(n_train) * val_fraction));
    if (val_fraction > 0.0 && n_val == 0 && n_train > 1) n_val = 1;
    const std::size_t n_fit = n_train - n_val;
    require(n_fit > 0, errc::invalid_argument, "validation split leaves no training data");

    auto fit = take(features.all, 0, n_fit);
    auto val = take(features.all, n_fit, n_train);

    auto net = cnn::build_reference_net(cfg.get("net.kind"), features.shape,
                                        cfg.stage_seed("init"));
    auto rep = cnn::train(net, fit, val, cfg.train());
    save_model(model_dir(cfg), net, cfg);

    std::string txt = "epoch train_loss val_loss val_accuracy\n";
    char buf[128];
    for (std::size_t e = 0; e < rep.train_loss.size(); ++e) {
        if (e < rep.val_loss.size())
            std::snprintf(buf, sizeof buf, "%zu %.6f %.6f %.6f\n", e + 1, rep.train_loss[e],
                          rep.val_loss[e], rep.val_accuracy[e]);
        else
            std::snprintf(buf, sizeof buf, "%zu %.6f - -\n", e + 1, rep.train_loss[e]);
        txt += buf;
    }
    txt += "best_epoch " + std::to_string(rep.best_epoch + 1) + "\n";
    write_text(fs::path(cfg.out_dir()) / "train_report.txt", txt);

    std::snprintf(buf, sizeof buf,
                  "train: %zu fit / %zu val examples, %zu epochs, final train loss %.6f (%.1fs)",
                  n_fit, n_val, rep.train_loss.size(), rep.train_loss.back(), rep.wall_seconds);
    return buf;
}

std::string run_eval(const config& cfg) {
    auto features = load_features(cfg);
    const ws::date cutoff = split_cutoff(cfg, features.dates);
    std::size_t n_train = 0;
    while (n_train < features.dates.size() && features.dates[n_train] < cutoff) ++n_train;
    require(n_train < features.dates.size(), errc::data, "no test examples after cutoff");
    auto test = take(features.all, n_train, features.dates.size());

    auto net = load_model(model_dir(cfg));
    auto pred = cnn::predict(net, test);

    auto model_report = eval::metrics(eval::make_confusion(pred.labels, test.labels));
    model_report.model = cfg.get("net.kind") + " cnn";
    model_report.config_hash = cfg.hash();
    model_report.seed = cfg.seed();
    model_report.has_loss = true;
    model_report.loss = cnn::loss(pred.probabilities, test.labels);

    auto coin = eval::random_baseline(test.labels, cfg.stage_seed("baseline"));
    auto coin_report = eval::metrics(eval::make_confusion(coin, test.labels));
    coin_report.model = "random baseline";
    coin_report.config_hash = model_report.config_hash;
    coin_report.seed = cfg.seed();

    std::string txt = "=== Model ===\n" + eval::format_report(model_report) +
                      "\n=== Random baseline ===\n" + eval::format_report(coin_report);
    write_text(fs::path(cfg.out_dir()) / "eval_report.txt", txt);

    nlohmann::json j;
    auto fill = [](const eval::report& r) {
        nlohmann::json o;
        o["model"] = r.model;
        o["n"] = r.n_test;
        o["tp"] = r.counts.tp;
        o["fp"] = r.counts.fp;
        o["fn"] = r.counts.fn;
        o["tn"] = r.counts.tn;
        o["accuracy"] = r.accuracy;
        o["tpr"] = r.tpr;
        o["tnr"] = r.tnr;
        o["f1"] = r.f1;
        if (r.has_loss) o["loss"] = r.loss;
        o["degenerate"] = nlohmann::json::array();
        if (r.tpr_degenerate) o["degenerate"].push_back("tpr");
        if (r.tnr_degenerate) o["degenerate"].push_back("tnr");
        if (r.f1_degenerate) o["degenerate"].push_back("f1");
        return o;
    };
    j["model"] = fill(model_report);
    j["random_baseline"] = fill(coin_report);
    j["config_hash"] = model_report.config_hash;
    j["seed"] = model_report.seed;
    write_text(fs::path(cfg.out_dir()) / "eval_report.json", j.dump(2) + "\n");

    char buf[160];
    std::snprintf(buf, sizeof buf, "eval: accuracy %.6f vs baseline %.6f on %llu test days",
                  model_report.accuracy, coin_report.accuracy,
                  static_cast<unsigned long long>(model_report.n_test));
    return buf;
}

std::string run_pipeline(const config& cfg) {
    ensure_dir(cfg.out_dir());
    cfg.save_file((fs::path(cfg.out_dir()) / "config.txt").string());
    std::string summary;
    if (cfg.get("data.source") == "synth") summary += run_synth(cfg) + "\n";
    summary += run_clean(cfg) + "\n";
    summary += run_features(cfg) + "\n";
    summary += run_train(cfg) + "\n";
    summary += run_eval(cfg);
    return summary;
}

} // namespace

std::string run_stage(const config& cfg, const std::string& stage) {
    if (stage == "synth") return run_synth(cfg);
    if (stage == "clean") return run_clean(cfg);
    if (stage == "denoise") return run_denoise(cfg);
    if (stage == "scalogram") return run_scalogram(cfg);
    if (stage == "features") return run_features(cfg);
    if (stage == "train") return run_train(cfg);
    if (stage == "eval") return run_eval(cfg);
    if (stage == "pipeline") return run_pipeline(cfg);
    fail(errc::invalid_argument, "unknown stage '" + stage + "'");
}

} // namespace ws::pipeline

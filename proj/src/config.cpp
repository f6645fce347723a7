#include "config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "rng.hpp"

namespace ws {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

const std::map<std::string, std::string> DEFAULTS = {
    {"run.out_dir", "out"},
    {"run.seed", "7"},
    {"run.threads", "0"},
    {"data.source", "synth"},
    {"data.csv_path", ""},
    {"synth.days", "300"},
    {"synth.signal_strength", "0.7"},
    {"synth.volatility", "0.0005"},
    {"synth.drift_amplitude", "0.04"},
    {"synth.vol_bump_depth", "1.0"},
    {"synth.base_price", "100"},
    {"synth.start_date", "2015-01-05"},
    {"label.scheme", "mean_390"},
    {"denoise.wavelet", "db4"},
    {"denoise.levels", "5"},
    {"denoise.shrink", "soft"},
    {"denoise.rule", "rigrsure"},
    {"denoise.per_level", "true"},
    {"denoise.boundary", "symmetric"},
    {"cwt.omega0", "6.0"},
    {"cwt.dj", "0.125"},
    {"features.indicators", "close,ema,rsi,ma60,correl"},
    {"features.ema_period", "30"},
    {"features.rsi_period", "14"},
    {"features.ma_window", "60"},
    {"features.correl_window", "30"},
    {"image.height", "64"},
    {"image.width", "64"},
    {"image.coi_mask", "none"},
    {"net.kind", "shallow"},
    {"train.epochs", "50"},
    {"train.batch_size", "32"},
    {"train.learning_rate", "0.01"},
    {"train.optimizer", "sgd_momentum"},
    {"train.momentum", "0.9"},
    {"train.patience", "10"},
    {"train.val_fraction", "0.1"},
    {"split.cutoff", ""},
    {"split.test_days", "0"},
};

} // namespace

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

config::config() : kv_(DEFAULTS) {}

void config::set(const std::string& key, const std::string& value) {
    require(DEFAULTS.count(key) > 0, errc::invalid_argument, "unknown config key '" + key + "'");
    kv_[key] = value;
}

bool config::has(const std::string& key) const { return kv_.count(key) > 0; }

const std::string& config::get(const std::string& key) const {
    auto it = kv_.find(key);
    require(it != kv_.end(), errc::invalid_argument, "unknown config key '" + key + "'");
    return it->second;
}

std::int64_t config::get_int(const std::string& key) const {
    const auto& v = get(key);
    try {
        std::size_t pos = 0;
        auto r = std::stoll(v, &pos);
        require(pos == v.size(), errc::invalid_argument, "");
        return r;
    } catch (...) {
        fail(errc::invalid_argument, "config " + key + ": '" + v + "' is not an integer");
    }
}

double config::get_double(const std::string& key) const {
    const auto& v = get(key);
    try {
        std::size_t pos = 0;
        double r = std::stod(v, &pos);
        require(pos == v.size(), errc::invalid_argument, "");
        return r;
    } catch (...) {
        fail(errc::invalid_argument, "config " + key + ": '" + v + "' is not a number");
    }
}

bool config::get_bool(const std::string& key) const {
    const auto& v = get(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(errc::invalid_argument, "config " + key + ": '" + v + "' is not a boolean");
}

void config::load_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            require(t.back() == ']', errc::parse,
                    origin + ":" + std::to_string(lineno) + ": unterminated section");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        auto eq = t.find('=');
        require(eq != std::string::npos, errc::parse,
                origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        require(!section.empty(), errc::parse,
                origin + ":" + std::to_string(lineno) + ": key outside any [section]");
        set(section + "." + key, value);
    }
}

void config::load_file(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), errc::io, "cannot open config: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    load_text(ss.str(), path);
}

std::string config::serialize() const {
    std::string out;
    std::string section;
    for (const auto& [key, value] : kv_) {  // std::map iterates sorted
        auto dot = key.find('.');
        std::string sec = key.substr(0, dot);
        if (sec != section) {
            if (!section.empty()) out += '\n';
            out += "[" + sec + "]\n";
            section = sec;
        }
        out += key.substr(dot + 1) + " = " + value + "\n";
    }
    return out;
}

void config::save_file(const std::string& path) const {
    std::ofstream f(path, std::ios::trunc);
    require(f.good(), errc::io, "cannot write config: " + path);
    f << serialize();
}

std::string config::hash() const {
    // identifies the experiment: where it runs and with how many workers does
    // not change what it computes
    std::string canon;
    for (const auto& [key, value] : kv_) {
        if (key == "run.out_dir" || key == "run.threads") continue;
        canon += key + "=" + value + "\n";
    }
    std::uint64_t h = fnv1a(canon);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ts::synth_config config::synth() const {
    ts::synth_config c;
    c.days = static_cast<int>(get_int("synth.days"));
    c.signal_strength = get_double("synth.signal_strength");
    c.vol_per_minute = get_double("synth.volatility");
    c.drift_amplitude = get_double("synth.drift_amplitude");
    c.vol_bump_depth = get_double("synth.vol_bump_depth");
    c.base_price = get_double("synth.base_price");
    c.start_date = parse_date(get("synth.start_date"));
    c.scheme = ts::parse_label_scheme(get("label.scheme"));
    return c;
}

denoise::config config::den() const {
    denoise::config d;
    d.wavelet = get("denoise.wavelet");
    d.levels = static_cast<int>(get_int("denoise.levels"));
    const auto& shrink = get("denoise.shrink");
    require(shrink == "soft" || shrink == "hard", errc::invalid_argument,
            "denoise.shrink must be soft or hard");
    d.shrink = shrink == "soft" ? denoise::shrink_kind::soft : denoise::shrink_kind::hard;
    const auto& rule = get("denoise.rule");
    require(rule == "rigrsure" || rule == "universal", errc::invalid_argument,
            "denoise.rule must be rigrsure or universal");
    d.rule.kind = rule == "rigrsure" ? denoise::rule_kind::rigrsure
                                     : denoise::rule_kind::universal;
    d.rule.per_level = get_bool("denoise.per_level");
    const auto& mode = get("denoise.boundary");
    require(mode == "symmetric" || mode == "periodic", errc::invalid_argument,
            "denoise.boundary must be symmetric or periodic");
    d.mode = mode == "symmetric" ? dwt::boundary::symmetric : dwt::boundary::periodic;
    return d;
}

feat::feature_config config::features() const {
    feat::feature_config f;
    f.indicators = split_list(get("features.indicators"));
    f.ind.ema_period = static_cast<int>(get_int("features.ema_period"));
    f.ind.rsi_period = static_cast<int>(get_int("features.rsi_period"));
    f.ind.ma_window = static_cast<int>(get_int("features.ma_window"));
    f.ind.correl_window = static_cast<int>(get_int("features.correl_window"));
    f.den = den();
    f.cwt.omega0 = get_double("cwt.omega0");
    f.cwt.dj = get_double("cwt.dj");
    f.image.height = static_cast<int>(get_int("image.height"));
    f.image.width = static_cast<int>(get_int("image.width"));
    const auto& mask = get("image.coi_mask");
    if (mask == "none") f.image.mask = cwt::coi_mask::none;
    else if (mask == "zero") f.image.mask = cwt::coi_mask::zero;
    else if (mask == "dim") f.image.mask = cwt::coi_mask::dim;
    else fail(errc::invalid_argument, "image.coi_mask must be none, zero, or dim");
    f.scheme = ts::parse_label_scheme(get("label.scheme"));
    return f;
}

cnn::train_config config::train() const {
    cnn::train_config t;
    t.epochs = static_cast<int>(get_int("train.epochs"));
    t.batch_size = static_cast<int>(get_int("train.batch_size"));
    t.learning_rate = get_double("train.learning_rate");
    const auto& opt = get("train.optimizer");
    require(opt == "sgd" || opt == "sgd_momentum", errc::invalid_argument,
            "train.optimizer must be sgd or sgd_momentum");
    t.use_momentum = opt == "sgd_momentum";
    t.momentum = get_double("train.momentum");
    t.early_stop_patience = static_cast<int>(get_int("train.patience"));
    t.seed = stage_seed("train");
    return t;
}

std::uint64_t config::seed() const { return static_cast<std::uint64_t>(get_int("run.seed")); }

std::uint64_t config::stage_seed(const std::string& stage) const {
    return derive_seed(seed(), stage);
}

std::string config::out_dir() const { return get("run.out_dir"); }

} // namespace ws

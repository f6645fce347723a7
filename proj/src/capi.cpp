// extern "C" boundary: exceptions from the C++ core map to status codes and a
// thread-local error message.
#include "wavestate.h"

#include <cstring>
#include <new>
#include <string>

#include "config.hpp"
#include "denoise.hpp"
#include "dwt.hpp"
#include "eval.hpp"
#include "pipeline.hpp"

namespace {

thread_local std::string g_last_error;

ws_status to_status(ws::errc c) {
    switch (c) {
        case ws::errc::invalid_argument: return WS_ERR_INVALID_ARGUMENT;
        case ws::errc::io: return WS_ERR_IO;
        case ws::errc::parse: return WS_ERR_PARSE;
        case ws::errc::data: return WS_ERR_DATA;
        case ws::errc::internal: return WS_ERR_INTERNAL;
    }
    return WS_ERR_INTERNAL;
}

template <typename Fn>
ws_status guarded(Fn&& fn) {
    try {
        fn();
        return WS_OK;
    } catch (const ws::error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return WS_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return WS_ERR_INTERNAL;
    }
}

ws_status need(bool cond, const char* msg) {
    if (cond) return WS_OK;
    g_last_error = msg;
    return WS_ERR_INVALID_ARGUMENT;
}

void copy_out(char* buf, size_t cap, const std::string& s) {
    if (!buf || cap == 0) return;
    const size_t n = s.size() < cap - 1 ? s.size() : cap - 1;
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
}

} // namespace

struct ws_config {
    ws::config impl;
};

struct ws_dwt {
    ws::dwt::decomposition impl;
};

struct ws_scalogram {
    ws::cwt::scalogram impl;
    std::vector<double> scales;
};

extern "C" {

const char* ws_version(void) { return "0.1.0"; }

const char* ws_last_error(void) { return g_last_error.c_str(); }

ws_status ws_config_create(ws_config** out) {
    if (auto rc = need(out != nullptr, "out is NULL")) return rc;
    return guarded([&] { *out = new ws_config(); });
}

void ws_config_destroy(ws_config* cfg) { delete cfg; }

ws_status ws_config_set(ws_config* cfg, const char* key, const char* value) {
    if (auto rc = need(cfg && key && value, "NULL argument")) return rc;
    return guarded([&] { cfg->impl.set(key, value); });
}

ws_status ws_config_get(const ws_config* cfg, const char* key, char* buf, size_t cap) {
    if (auto rc = need(cfg && key && buf && cap > 0, "NULL argument")) return rc;
    return guarded([&] { copy_out(buf, cap, cfg->impl.get(key)); });
}

ws_status ws_config_load_file(ws_config* cfg, const char* path) {
    if (auto rc = need(cfg && path, "NULL argument")) return rc;
    return guarded([&] { cfg->impl.load_file(path); });
}

ws_status ws_config_save_file(const ws_config* cfg, const char* path) {
    if (auto rc = need(cfg && path, "NULL argument")) return rc;
    return guarded([&] { cfg->impl.save_file(path); });
}

ws_status ws_run_stage(const ws_config* cfg, const char* stage, char* summary, size_t cap) {
    if (auto rc = need(cfg && stage, "NULL argument")) return rc;
    return guarded([&] {
        std::string s = ws::pipeline::run_stage(cfg->impl, stage);
        if (summary) copy_out(summary, cap, s);
    });
}

ws_status ws_dwt_decompose(const double* x, size_t n, const char* wavelet, int levels,
                           const char* mode, ws_dwt** out) {
    if (auto rc = need(x && wavelet && mode && out, "NULL argument")) return rc;
    return guarded([&] {
        std::string m = mode;
        ws::require(m == "symmetric" || m == "periodic", ws::errc::invalid_argument,
                    "mode must be symmetric or periodic");
        auto w = ws::dwt::wavelet_filters(wavelet);
        auto d = ws::dwt::decompose(std::vector<double>(x, x + n), w, levels,
                                    m == "symmetric" ? ws::dwt::boundary::symmetric
                                                     : ws::dwt::boundary::periodic);
        *out = new ws_dwt{std::move(d)};
    });
}

void ws_dwt_destroy(ws_dwt* d) { delete d; }

int ws_dwt_levels(const ws_dwt* d) { return d ? d->impl.levels() : 0; }

ws_status ws_dwt_approx(const ws_dwt* d, const double** data, size_t* len) {
    if (auto rc = need(d && data && len, "NULL argument")) return rc;
    *data = d->impl.approx.data();
    *len = d->impl.approx.size();
    return WS_OK;
}

ws_status ws_dwt_detail(const ws_dwt* d, int level, const double** data, size_t* len) {
    if (auto rc = need(d && data && len, "NULL argument")) return rc;
    if (auto rc = need(level >= 1 && level <= d->impl.levels(), "level out of range")) return rc;
    const auto& v = d->impl.details[static_cast<size_t>(level - 1)];
    *data = v.data();
    *len = v.size();
    return WS_OK;
}

ws_status ws_dwt_reconstruct(const ws_dwt* d, double* out, size_t n) {
    if (auto rc = need(d && out, "NULL argument")) return rc;
    if (auto rc = need(n == d->impl.original_length, "output length != original length"))
        return rc;
    return guarded([&] {
        auto x = ws::dwt::reconstruct(d->impl);
        std::memcpy(out, x.data(), x.size() * sizeof(double));
    });
}

ws_status ws_hard_threshold(const double* w, size_t n, double lambda, double* out) {
    if (auto rc = need(w && out, "NULL argument")) return rc;
    return guarded([&] {
        auto r = ws::denoise::hard_threshold(std::vector<double>(w, w + n), lambda);
        std::memcpy(out, r.data(), n * sizeof(double));
    });
}

ws_status ws_soft_threshold(const double* w, size_t n, double lambda, double* out) {
    if (auto rc = need(w && out, "NULL argument")) return rc;
    return guarded([&] {
        auto r = ws::denoise::soft_threshold(std::vector<double>(w, w + n), lambda);
        std::memcpy(out, r.data(), n * sizeof(double));
    });
}

ws_status ws_rigrsure_threshold(const double* w, size_t n, double* lambda) {
    if (auto rc = need(w && lambda, "NULL argument")) return rc;
    return guarded(
        [&] { *lambda = ws::denoise::rigrsure_threshold(std::vector<double>(w, w + n)); });
}

ws_status ws_denoise(const double* x, size_t n, const char* wavelet, int levels,
                     const char* shrink, const char* rule, double* out) {
    if (auto rc = need(x && wavelet && shrink && rule && out, "NULL argument")) return rc;
    return guarded([&] {
        ws::denoise::config cfg;
        cfg.wavelet = wavelet;
        cfg.levels = levels;
        std::string sh = shrink, ru = rule;
        ws::require(sh == "soft" || sh == "hard", ws::errc::invalid_argument,
                    "shrink must be soft or hard");
        ws::require(ru == "rigrsure" || ru == "universal", ws::errc::invalid_argument,
                    "rule must be rigrsure or universal");
        cfg.shrink = sh == "soft" ? ws::denoise::shrink_kind::soft
                                  : ws::denoise::shrink_kind::hard;
        cfg.rule.kind = ru == "rigrsure" ? ws::denoise::rule_kind::rigrsure
                                         : ws::denoise::rule_kind::universal;
        auto r = ws::denoise::denoise(std::vector<double>(x, x + n), cfg);
        std::memcpy(out, r.data(), n * sizeof(double));
    });
}

ws_status ws_cwt_power(const double* x, size_t n, double dt, double omega0, ws_scalogram** out) {
    if (auto rc = need(x && out, "NULL argument")) return rc;
    return guarded([&] {
        auto mother = ws::cwt::make_mother("morlet", omega0);
        auto grid = ws::cwt::default_grid(n, dt);
        auto sg = ws::cwt::make_scalogram(std::vector<double>(x, x + n), mother, grid, dt);
        auto handle = new ws_scalogram{std::move(sg), {}};
        handle->scales = handle->impl.grid.scales();
        *out = handle;
    });
}

void ws_scalogram_destroy(ws_scalogram* sg) { delete sg; }

ws_status ws_scalogram_dims(const ws_scalogram* sg, size_t* rows, size_t* cols) {
    if (auto rc = need(sg && rows && cols, "NULL argument")) return rc;
    *rows = sg->impl.rows;
    *cols = sg->impl.cols;
    return WS_OK;
}

ws_status ws_scalogram_data(const ws_scalogram* sg, const double** power) {
    if (auto rc = need(sg && power, "NULL argument")) return rc;
    *power = sg->impl.power.data();
    return WS_OK;
}

ws_status ws_scalogram_scales(const ws_scalogram* sg, const double** scales, size_t* count) {
    if (auto rc = need(sg && scales && count, "NULL argument")) return rc;
    *scales = sg->scales.data();
    *count = sg->scales.size();
    return WS_OK;
}

ws_status ws_scalogram_coi(const ws_scalogram* sg, const double** coi, size_t* count) {
    if (auto rc = need(sg && coi && count, "NULL argument")) return rc;
    *coi = sg->impl.coi.data();
    *count = sg->impl.coi.size();
    return WS_OK;
}

ws_status ws_metrics_from_counts(uint64_t tp, uint64_t fp, uint64_t fn, uint64_t tn,
                                 ws_metrics* out) {
    if (auto rc = need(out != nullptr, "out is NULL")) return rc;
    return guarded([&] {
        auto r = ws::eval::metrics(ws::eval::confusion{tp, fp, fn, tn});
        out->accuracy = r.accuracy;
        out->tpr = r.tpr;
        out->tnr = r.tnr;
        out->f1 = r.f1;
        out->tpr_degenerate = r.tpr_degenerate ? 1 : 0;
        out->tnr_degenerate = r.tnr_degenerate ? 1 : 0;
        out->f1_degenerate = r.f1_degenerate ? 1 : 0;
    });
}

} // extern "C"

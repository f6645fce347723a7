/*
 * wavestate C API: intraday market-state classification from denoised
 * wavelet scalograms.
 *
 * All functions return WS_OK (0) on success; on failure they return a
 * nonzero status and ws_last_error() describes the problem (thread-local).
 * Opaque handles are created and destroyed by matching create/destroy calls.
 */
#ifndef WAVESTATE_H
#define WAVESTATE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ws_status {
    WS_OK = 0,
    WS_ERR_INVALID_ARGUMENT = 1,
    WS_ERR_IO = 2,
    WS_ERR_PARSE = 3,
    WS_ERR_DATA = 4,
    WS_ERR_INTERNAL = 5
} ws_status;

const char* ws_version(void);
const char* ws_last_error(void);

/* ---------- pipeline configuration ---------- */

typedef struct ws_config ws_config;

ws_status ws_config_create(ws_config** out);
void ws_config_destroy(ws_config* cfg);

/* keys are "section.key" as in the config file, e.g. "synth.days" */
ws_status ws_config_set(ws_config* cfg, const char* key, const char* value);
ws_status ws_config_get(const ws_config* cfg, const char* key, char* buf, size_t cap);
ws_status ws_config_load_file(ws_config* cfg, const char* path);
ws_status ws_config_save_file(const ws_config* cfg, const char* path);

/* stage: synth | clean | denoise | scalogram | features | train | eval |
 * pipeline. Reads inputs and writes artifacts under run.out_dir. When
 * `summary` is non-NULL it receives a NUL-terminated summary (truncated to
 * cap - 1 characters). */
ws_status ws_run_stage(const ws_config* cfg, const char* stage, char* summary, size_t cap);

/* ---------- discrete wavelet transform ---------- */

typedef struct ws_dwt ws_dwt;

/* wavelet: "haar" | "db4"; mode: "symmetric" | "periodic" */
ws_status ws_dwt_decompose(const double* x, size_t n, const char* wavelet, int levels,
                           const char* mode, ws_dwt** out);
void ws_dwt_destroy(ws_dwt* d);
int ws_dwt_levels(const ws_dwt* d);
ws_status ws_dwt_approx(const ws_dwt* d, const double** data, size_t* len);
/* level in [1, levels] */
ws_status ws_dwt_detail(const ws_dwt* d, int level, const double** data, size_t* len);
/* out must hold the original signal length */
ws_status ws_dwt_reconstruct(const ws_dwt* d, double* out, size_t n);

/* ---------- threshold denoising ---------- */

ws_status ws_hard_threshold(const double* w, size_t n, double lambda, double* out);
ws_status ws_soft_threshold(const double* w, size_t n, double lambda, double* out);
/* SURE-minimizing threshold for unit-variance coefficients */
ws_status ws_rigrsure_threshold(const double* w, size_t n, double* lambda);
/* shrink: "soft" | "hard"; rule: "rigrsure" | "universal"; out holds n values */
ws_status ws_denoise(const double* x, size_t n, const char* wavelet, int levels,
                     const char* shrink, const char* rule, double* out);

/* ---------- continuous wavelet transform ---------- */

typedef struct ws_scalogram ws_scalogram;

/* Morlet power scalogram on the default scale grid (s0 = 2 dt, 8 scales per
 * octave, largest scale <= n dt / 4) */
ws_status ws_cwt_power(const double* x, size_t n, double dt, double omega0, ws_scalogram** out);
void ws_scalogram_destroy(ws_scalogram* sg);
ws_status ws_scalogram_dims(const ws_scalogram* sg, size_t* rows, size_t* cols);
/* row-major rows x cols, rows ordered by ascending scale */
ws_status ws_scalogram_data(const ws_scalogram* sg, const double** power);
ws_status ws_scalogram_scales(const ws_scalogram* sg, const double** scales, size_t* count);
/* per-time-index maximum trusted scale */
ws_status ws_scalogram_coi(const ws_scalogram* sg, const double** coi, size_t* count);

/* ---------- evaluation ---------- */

typedef struct ws_metrics {
    double accuracy;
    double tpr;
    double tnr;
    double f1;
    int tpr_degenerate;
    int tnr_degenerate;
    int f1_degenerate;
} ws_metrics;

ws_status ws_metrics_from_counts(uint64_t tp, uint64_t fp, uint64_t fn, uint64_t tn,
                                 ws_metrics* out);

#ifdef __cplusplus
}
#endif

#endif /* WAVESTATE_H */

/* nyqmon: telemetry sampling-rate analysis.
 *
 * Plain-C surface over the analysis engine: opaque handles, integer status
 * codes, no exceptions across the boundary. Every function that can fail
 * returns nq_status; on failure nq_last_error() holds a human-readable
 * message for the calling thread until its next nyqmon call.
 *
 * Ownership: every *_free takes the pointer returned by a creating call.
 * Strings returned as const char* stay owned by the handle they came from
 * and are valid until the next call on that handle (or its free).
 */

#ifndef NYQMON_H
#define NYQMON_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nq_status {
    NQ_OK = 0,
    NQ_ERR_INVALID_ARGUMENT,
    NQ_ERR_EMPTY_TRACE,
    NQ_ERR_GAP_TOO_LARGE,
    NQ_ERR_INVALID_RATE,
    NQ_ERR_SHAPE_MISMATCH,
    NQ_ERR_EMPTY_SERIES,
    NQ_ERR_MISSING_COEFFICIENTS,
    NQ_ERR_TOO_SHORT,
    NQ_ERR_DEGENERATE_SIGNAL,
    NQ_ERR_INVALID_CUTOFF,
    NQ_ERR_INVALID_TARGET_RATE,
    NQ_ERR_INTEGER_RATIO,
    NQ_ERR_WINDOW_MISMATCH,
    NQ_ERR_RATE_MISMATCH,
    NQ_ERR_CONFIG_VIOLATION,
    NQ_ERR_HORIZON_TOO_SHORT,
    NQ_ERR_PARSE,
    NQ_ERR_NON_MONOTONE_TIMESTAMPS,
    NQ_ERR_EMPTY_FILE,
    NQ_ERR_ALL_TRACES_FAILED,
    NQ_ERR_IO,
    NQ_ERR_OUT_OF_MEMORY,
    NQ_ERR_NULL_POINTER,
    NQ_ERR_UNKNOWN
} nq_status;

const char* nq_status_name(nq_status s);
const char* nq_last_error(void); /* thread-local; never NULL */
const char* nq_version(void);

/* ---- handles ---------------------------------------------------------- */

typedef struct nq_trace nq_trace;             /* irregular timestamped points */
typedef struct nq_series nq_series;           /* uniform grid of values */
typedef struct nq_spectrum nq_spectrum;       /* frequency-domain view */
typedef struct nq_signal_spec nq_signal_spec; /* synthetic scenario */
typedef struct nq_simulation nq_simulation;   /* adaptive-sampling run */
typedef struct nq_report_set nq_report_set;   /* batch analysis results */

/* ---- traces ----------------------------------------------------------- */

/* CSV with a `timestamp,value` header; `#` comment lines may annotate
 * `# metric:`, `# device:`, `# unit:`. Missing metric/device fall back to
 * the file stem split on "__". */
nq_status nq_trace_load_csv(const char* path, nq_trace** out);
nq_status nq_trace_create(const double* timestamps, const double* values,
                          size_t n, nq_trace** out);
/* NULL leaves a field untouched. */
nq_status nq_trace_set_meta(nq_trace* t, const char* metric,
                            const char* device, const char* unit);
size_t nq_trace_size(const nq_trace* t);
nq_status nq_trace_point(const nq_trace* t, size_t i, double* timestamp,
                         double* value);
const char* nq_trace_metric(const nq_trace* t);
const char* nq_trace_device(const nq_trace* t);
const char* nq_trace_unit(const nq_trace* t);
nq_status nq_trace_write_csv(const nq_trace* t, const char* path);
void nq_trace_free(nq_trace* t);

/* ---- uniform series --------------------------------------------------- */

/* Snap each grid instant to the nearest point (earlier wins on ties).
 * A gap wider than max_gap_multiple intervals is an error; pass <= 0 for
 * the default multiple of 10. */
nq_status nq_trace_regularize(const nq_trace* t, double rate,
                              double max_gap_multiple, nq_series** out);
nq_status nq_series_create(double start_time, double rate,
                           const double* values, size_t n, nq_series** out);
size_t nq_series_size(const nq_series* s);
double nq_series_rate(const nq_series* s);
double nq_series_start_time(const nq_series* s);
/* Copies min(cap, size) values. */
nq_status nq_series_values(const nq_series* s, double* out, size_t cap);
nq_status nq_series_decimate(const nq_series* s, double target_rate,
                             nq_series** out);
nq_status nq_series_quantize(const nq_series* s, double quantum, double origin,
                             nq_series** out);
nq_status nq_series_l2_distance(const nq_series* a, const nq_series* b,
                                double* out);
nq_status nq_series_write_csv(const nq_series* s, const char* path);
void nq_series_free(nq_series* s);

/* ---- spectra ---------------------------------------------------------- */

nq_status nq_series_dft(const nq_series* s, nq_spectrum** out);
nq_status nq_spectrum_inverse(const nq_spectrum* sp, nq_series** out);
size_t nq_spectrum_bins(const nq_spectrum* sp);
double nq_spectrum_bin_width(const nq_spectrum* sp);
nq_status nq_spectrum_psd(const nq_spectrum* sp, double* out, size_t cap);
/* One-sided `frequency_hz,psd`, bins 0..floor(N/2). */
nq_status nq_spectrum_write_csv(const nq_spectrum* sp, const char* path);
void nq_spectrum_free(nq_spectrum* sp);

/* ---- rate estimation and reconstruction ------------------------------- */

/* Rate that captures `energy_fraction` of the non-DC spectral energy
 * (<= 0 selects the default 0.99). Writes -1 when the spectrum runs into
 * the fold, i.e. the series itself is undersampled and the true rate is
 * unknowable from it. Flat signals are NQ_ERR_DEGENERATE_SIGNAL. */
nq_status nq_estimate_nyquist(const nq_series* s, double energy_fraction,
                              double* rate_out);
/* Keep content at or below cutoff_hz, resample onto target_rate (>= the
 * series rate). */
nq_status nq_reconstruct(const nq_series* s, double cutoff_hz,
                         double target_rate, nq_series** out);
/* Same, then snapped back onto the storage grid (origin + k*quantum). */
nq_status nq_reconstruct_quantized(const nq_series* s, double cutoff_hz,
                                   double target_rate, double quantum,
                                   double origin, nq_series** out);

/* ---- alias detection -------------------------------------------------- */

typedef struct nq_alias_result {
    int aliased;
    double discrepancy; /* normalized spectral distance, 0..1 */
    double threshold;
    double band_max_hz; /* streams compared over (0, band_max_hz] */
} nq_alias_result;

/* f1 = ratio * base (fast probe stream), f2 = base. Integer ratios are
 * rejected: both grids would fold identically. ratio <= 0 selects the
 * default 1.5. */
nq_status nq_plan_dual_rates(double base_rate, double ratio, double* f1,
                             double* f2);
/* `fast` and `slow` must cover the same window at rates f1 and f2 of the
 * plan for base_rate/ratio. threshold <= 0 selects the default 0.1;
 * denoise_amplitude > 0 zeroes bins below that component amplitude. */
nq_status nq_detect_aliasing(const nq_spectrum* fast, const nq_spectrum* slow,
                             double base_rate, double ratio, double threshold,
                             double denoise_amplitude, nq_alias_result* out);

/* ---- synthetic scenarios ---------------------------------------------- */

/* Text grammar (one key per line, `#` comments):
 *   offset X | trend X | noise X | seed N
 *   component FREQ AMP [PHASE]
 *   change TIME            (components after this line belong to the event)
 */
nq_status nq_spec_parse(const char* text, nq_signal_spec** out);
nq_status nq_spec_load(const char* path, nq_signal_spec** out);
nq_status nq_spec_preset_temperature(double noise_amplitude,
                                     nq_signal_spec** out);
const char* nq_spec_text(nq_signal_spec* sp); /* NULL on error */
nq_status nq_spec_write(nq_signal_spec* sp, const char* path);
nq_status nq_spec_query(const nq_signal_spec* sp, double t, double* value);
nq_status nq_spec_generate(const nq_signal_spec* sp, double rate,
                           double duration, double start_time,
                           nq_series** out);
/* Twice the highest component frequency active in [t0, t1); use -INFINITY
 * and INFINITY for the whole timeline. */
nq_status nq_spec_true_nyquist(const nq_signal_spec* sp, double t0, double t1,
                               double* out);
void nq_spec_free(nq_signal_spec* sp);

/* ---- adaptive sampling ------------------------------------------------ */

typedef struct nq_sampler_config {
    double window_seconds;
    double step_seconds;
    double initial_rate;
    double min_rate;
    double max_rate;
    double probe_factor;
    double headroom;
    int decrease_patience;
    size_t memory_depth;
    double dual_ratio;
    double alias_threshold;
    double denoise_amplitude;
    double energy_fraction;
} nq_sampler_config;

void nq_sampler_config_init(nq_sampler_config* cfg); /* defaults */

typedef enum nq_mode { NQ_MODE_PROBE = 0, NQ_MODE_STEADY = 1 } nq_mode;
typedef enum nq_verdict {
    NQ_VERDICT_CLEAN = 0,
    NQ_VERDICT_ALIASED = 1,
    NQ_VERDICT_DEGENERATE = 2,
    NQ_VERDICT_SHORT = 3
} nq_verdict;

typedef struct nq_window_record {
    size_t index;
    double start_time;
    int verdict;    /* nq_verdict */
    int mode_after; /* nq_mode */
    double rate_before;
    double rate_after;
    double estimate_hz; /* -1 when the window gave no usable estimate */
    double discrepancy;
    size_t new_samples;
    size_t total_samples;
} nq_window_record;

nq_status nq_simulate(const nq_signal_spec* sp, const nq_sampler_config* cfg,
                      double horizon_seconds, nq_simulation** out);
size_t nq_simulation_window_count(const nq_simulation* sim);
nq_status nq_simulation_window(const nq_simulation* sim, size_t i,
                               nq_window_record* out);
size_t nq_simulation_total_cost(const nq_simulation* sim);
double nq_simulation_covered_seconds(const nq_simulation* sim);
double nq_simulation_final_rate(const nq_simulation* sim);
int nq_simulation_final_mode(const nq_simulation* sim);
nq_status nq_simulation_write_log_csv(const nq_simulation* sim,
                                      const char* path);
nq_status nq_simulation_write_samples_csv(const nq_simulation* sim,
                                          const char* path);
void nq_simulation_free(nq_simulation* sim);

/* ---- trace reports ---------------------------------------------------- */

typedef struct nq_report_options {
    double energy_fraction;  /* <= 0: default 0.99 */
    double max_gap_multiple; /* <= 0: default 10 */
    double rate_hint;        /* <= 0: derive from median gap */
    double window_seconds;   /* <= 0: whole trace at once */
} nq_report_options;

void nq_report_options_init(nq_report_options* opt);

typedef struct nq_trace_report {
    int aliased;
    int degenerate;
    double actual_rate_hz;
    double nyquist_hz;         /* -1 when aliased, 0 when degenerate */
    double oversampling_ratio; /* actual/nyquist; -1 when undefined */
    size_t points_in_trace;
    size_t samples_analyzed;
    size_t windows_total;
    size_t windows_aliased;
} nq_trace_report;

nq_status nq_analyze_trace(const nq_trace* t, const nq_report_options* opt,
                           nq_trace_report* out);
nq_status nq_analyze_file(const char* path, const nq_report_options* opt,
                          nq_trace_report* out);

/* Analyzes every path; individually broken traces are recorded as skipped.
 * Fails only if nothing could be analyzed. */
nq_status nq_batch_report(const char* const* paths, size_t n,
                          const nq_report_options* opt, nq_report_set** out);
size_t nq_report_count(const nq_report_set* r);
nq_status nq_report_entry(const nq_report_set* r, size_t i,
                          nq_trace_report* out);
const char* nq_report_entry_path(const nq_report_set* r, size_t i);
const char* nq_report_entry_metric(const nq_report_set* r, size_t i);
const char* nq_report_entry_device(const nq_report_set* r, size_t i);
size_t nq_report_skipped_count(const nq_report_set* r);
const char* nq_report_skipped_path(const nq_report_set* r, size_t i);
const char* nq_report_skipped_reason(const nq_report_set* r, size_t i);
nq_status nq_report_write_json(const nq_report_set* r, const char* path);
/* metric,oversampling_ratio,cumulative_fraction rows, ratios ascending. */
nq_status nq_report_write_cdf_csv(const nq_report_set* r, const char* path);
void nq_report_free(nq_report_set* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NYQMON_H */

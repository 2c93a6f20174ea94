#include "nyqmon.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "alias.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "report.hpp"
#include "sampler.hpp"
#include "series.hpp"
#include "spectral.hpp"
#include "synth.hpp"

// Handle types are thin wrappers; all behavior lives in the core library.

struct nq_trace {
    nyqmon::TimeSeries ts;
};
struct nq_series {
    nyqmon::UniformSeries us;
};
struct nq_spectrum {
    nyqmon::Spectrum s;
};
struct nq_signal_spec {
    nyqmon::SignalSpec spec;
    std::string text_cache;
};
struct nq_simulation {
    nyqmon::SimulationResult r;
};
struct nq_report_set {
    nyqmon::ReportSet set;
};

namespace {

thread_local std::string g_last_error;

nq_status map_errc(nyqmon::errc c) {
    using nyqmon::errc;
    switch (c) {
    case errc::invalid_argument: return NQ_ERR_INVALID_ARGUMENT;
    case errc::empty_trace: return NQ_ERR_EMPTY_TRACE;
    case errc::gap_too_large: return NQ_ERR_GAP_TOO_LARGE;
    case errc::invalid_rate: return NQ_ERR_INVALID_RATE;
    case errc::shape_mismatch: return NQ_ERR_SHAPE_MISMATCH;
    case errc::empty_series: return NQ_ERR_EMPTY_SERIES;
    case errc::missing_coefficients: return NQ_ERR_MISSING_COEFFICIENTS;
    case errc::too_short: return NQ_ERR_TOO_SHORT;
    case errc::degenerate_signal: return NQ_ERR_DEGENERATE_SIGNAL;
    case errc::invalid_cutoff: return NQ_ERR_INVALID_CUTOFF;
    case errc::invalid_target_rate: return NQ_ERR_INVALID_TARGET_RATE;
    case errc::integer_ratio: return NQ_ERR_INTEGER_RATIO;
    case errc::window_mismatch: return NQ_ERR_WINDOW_MISMATCH;
    case errc::rate_mismatch: return NQ_ERR_RATE_MISMATCH;
    case errc::config_violation: return NQ_ERR_CONFIG_VIOLATION;
    case errc::horizon_too_short: return NQ_ERR_HORIZON_TOO_SHORT;
    case errc::parse_error: return NQ_ERR_PARSE;
    case errc::non_monotone_timestamps: return NQ_ERR_NON_MONOTONE_TIMESTAMPS;
    case errc::empty_file: return NQ_ERR_EMPTY_FILE;
    case errc::all_traces_failed: return NQ_ERR_ALL_TRACES_FAILED;
    case errc::io_error: return NQ_ERR_IO;
    }
    return NQ_ERR_UNKNOWN;
}

template <typename F>
nq_status guarded(F&& f) {
    try {
        f();
        return NQ_OK;
    } catch (const nyqmon::error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return NQ_ERR_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NQ_ERR_UNKNOWN;
    }
}

nq_status null_arg(const char* what) {
    g_last_error = std::string("null pointer: ") + what;
    return NQ_ERR_NULL_POINTER;
}

nyqmon::ReportOptions map_options(const nq_report_options* opt) {
    nyqmon::ReportOptions o;
    if (!opt)
        return o;
    if (opt->energy_fraction > 0.0)
        o.energy_fraction = opt->energy_fraction;
    if (opt->max_gap_multiple > 0.0)
        o.max_gap_multiple = opt->max_gap_multiple;
    if (opt->rate_hint > 0.0)
        o.rate_hint = opt->rate_hint;
    if (opt->window_seconds > 0.0)
        o.window_seconds = opt->window_seconds;
    return o;
}

void fill_report(const nyqmon::TraceReport& in, nq_trace_report* out) {
    out->aliased = in.aliased ? 1 : 0;
    out->degenerate = in.degenerate ? 1 : 0;
    out->actual_rate_hz = in.actual_rate_hz;
    out->nyquist_hz = in.nyquist_hz;
    out->oversampling_ratio = in.oversampling_ratio;
    out->points_in_trace = in.points_in_trace;
    out->samples_analyzed = in.samples_analyzed;
    out->windows_total = in.windows_total;
    out->windows_aliased = in.windows_aliased;
}

} // namespace

extern "C" {

const char* nq_status_name(nq_status s) {
    switch (s) {
    case NQ_OK: return "Ok";
    case NQ_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case NQ_ERR_EMPTY_TRACE: return "EmptyTrace";
    case NQ_ERR_GAP_TOO_LARGE: return "GapTooLarge";
    case NQ_ERR_INVALID_RATE: return "InvalidRate";
    case NQ_ERR_SHAPE_MISMATCH: return "ShapeMismatch";
    case NQ_ERR_EMPTY_SERIES: return "EmptySeries";
    case NQ_ERR_MISSING_COEFFICIENTS: return "MissingCoefficients";
    case NQ_ERR_TOO_SHORT: return "TooShort";
    case NQ_ERR_DEGENERATE_SIGNAL: return "DegenerateSignal";
    case NQ_ERR_INVALID_CUTOFF: return "InvalidCutoff";
    case NQ_ERR_INVALID_TARGET_RATE: return "InvalidTargetRate";
    case NQ_ERR_INTEGER_RATIO: return "IntegerRatio";
    case NQ_ERR_WINDOW_MISMATCH: return "WindowMismatch";
    case NQ_ERR_RATE_MISMATCH: return "RateMismatch";
    case NQ_ERR_CONFIG_VIOLATION: return "ConfigViolation";
    case NQ_ERR_HORIZON_TOO_SHORT: return "HorizonTooShort";
    case NQ_ERR_PARSE: return "ParseError";
    case NQ_ERR_NON_MONOTONE_TIMESTAMPS: return "NonMonotoneTimestamps";
    case NQ_ERR_EMPTY_FILE: return "EmptyFile";
    case NQ_ERR_ALL_TRACES_FAILED: return "AllTracesFailed";
    case NQ_ERR_IO: return "IoError";
    case NQ_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case NQ_ERR_NULL_POINTER: return "NullPointer";
    case NQ_ERR_UNKNOWN: return "Unknown";
    }
    return "Unknown";
}

const char* nq_last_error(void) {
    return g_last_error.c_str();
}

const char* nq_version(void) {
    return "1.0.0";
}

/* ---- traces ----------------------------------------------------------- */

nq_status nq_trace_load_csv(const char* path, nq_trace** out) {
    if (!path || !out)
        return null_arg("nq_trace_load_csv");
    return guarded([&] { *out = new nq_trace{nyqmon::load_trace_csv(path)}; });
}

nq_status nq_trace_create(const double* timestamps, const double* values,
                          size_t n, nq_trace** out) {
    if (!timestamps || !values || !out)
        return null_arg("nq_trace_create");
    return guarded([&] {
        nyqmon::TimeSeries ts;
        ts.points.resize(n);
        for (size_t i = 0; i < n; ++i)
            ts.points[i] = {timestamps[i], values[i]};
        nyqmon::validate(ts);
        *out = new nq_trace{std::move(ts)};
    });
}

nq_status nq_trace_set_meta(nq_trace* t, const char* metric,
                            const char* device, const char* unit) {
    if (!t)
        return null_arg("nq_trace_set_meta");
    if (metric)
        t->ts.metric_name = metric;
    if (device)
        t->ts.device_id = device;
    if (unit)
        t->ts.unit = unit;
    return NQ_OK;
}

size_t nq_trace_size(const nq_trace* t) {
    return t ? t->ts.points.size() : 0;
}

nq_status nq_trace_point(const nq_trace* t, size_t i, double* timestamp,
                         double* value) {
    if (!t || !timestamp || !value)
        return null_arg("nq_trace_point");
    if (i >= t->ts.points.size()) {
        g_last_error = "nq_trace_point: index out of range";
        return NQ_ERR_INVALID_ARGUMENT;
    }
    *timestamp = t->ts.points[i].timestamp;
    *value = t->ts.points[i].value;
    return NQ_OK;
}

const char* nq_trace_metric(const nq_trace* t) {
    return t ? t->ts.metric_name.c_str() : "";
}

const char* nq_trace_device(const nq_trace* t) {
    return t ? t->ts.device_id.c_str() : "";
}

const char* nq_trace_unit(const nq_trace* t) {
    return t ? t->ts.unit.c_str() : "";
}

nq_status nq_trace_write_csv(const nq_trace* t, const char* path) {
    if (!t || !path)
        return null_arg("nq_trace_write_csv");
    return guarded([&] { nyqmon::write_trace_csv(path, t->ts); });
}

void nq_trace_free(nq_trace* t) {
    delete t;
}

/* ---- uniform series --------------------------------------------------- */

nq_status nq_trace_regularize(const nq_trace* t, double rate,
                              double max_gap_multiple, nq_series** out) {
    if (!t || !out)
        return null_arg("nq_trace_regularize");
    return guarded([&] {
        const double mult =
            max_gap_multiple > 0.0 ? max_gap_multiple : nyqmon::kDefaultMaxGapMultiple;
        *out = new nq_series{nyqmon::regularize(t->ts, rate, mult)};
    });
}

nq_status nq_series_create(double start_time, double rate,
                           const double* values, size_t n, nq_series** out) {
    if (!values || !out)
        return null_arg("nq_series_create");
    return guarded([&] {
        nyqmon::UniformSeries us;
        us.start_time = start_time;
        us.rate = rate;
        us.values.assign(values, values + n);
        nyqmon::validate(us);
        *out = new nq_series{std::move(us)};
    });
}

size_t nq_series_size(const nq_series* s) {
    return s ? s->us.values.size() : 0;
}

double nq_series_rate(const nq_series* s) {
    return s ? s->us.rate : 0.0;
}

double nq_series_start_time(const nq_series* s) {
    return s ? s->us.start_time : 0.0;
}

nq_status nq_series_values(const nq_series* s, double* out, size_t cap) {
    if (!s || !out)
        return null_arg("nq_series_values");
    const size_t n = std::min(cap, s->us.values.size());
    std::memcpy(out, s->us.values.data(), n * sizeof(double));
    return NQ_OK;
}

nq_status nq_series_decimate(const nq_series* s, double target_rate,
                             nq_series** out) {
    if (!s || !out)
        return null_arg("nq_series_decimate");
    return guarded([&] { *out = new nq_series{nyqmon::decimate(s->us, target_rate)}; });
}

nq_status nq_series_quantize(const nq_series* s, double quantum, double origin,
                             nq_series** out) {
    if (!s || !out)
        return null_arg("nq_series_quantize");
    return guarded(
        [&] { *out = new nq_series{nyqmon::quantize(s->us, {quantum, origin})}; });
}

nq_status nq_series_l2_distance(const nq_series* a, const nq_series* b,
                                double* out) {
    if (!a || !b || !out)
        return null_arg("nq_series_l2_distance");
    return guarded([&] { *out = nyqmon::l2_distance(a->us, b->us); });
}

nq_status nq_series_write_csv(const nq_series* s, const char* path) {
    if (!s || !path)
        return null_arg("nq_series_write_csv");
    return guarded([&] { nyqmon::write_uniform_csv(path, s->us); });
}

void nq_series_free(nq_series* s) {
    delete s;
}

/* ---- spectra ---------------------------------------------------------- */

nq_status nq_series_dft(const nq_series* s, nq_spectrum** out) {
    if (!s || !out)
        return null_arg("nq_series_dft");
    return guarded([&] { *out = new nq_spectrum{nyqmon::dft(s->us)}; });
}

nq_status nq_spectrum_inverse(const nq_spectrum* sp, nq_series** out) {
    if (!sp || !out)
        return null_arg("nq_spectrum_inverse");
    return guarded([&] { *out = new nq_series{nyqmon::inverse_dft(sp->s)}; });
}

size_t nq_spectrum_bins(const nq_spectrum* sp) {
    return sp ? sp->s.psd.size() : 0;
}

double nq_spectrum_bin_width(const nq_spectrum* sp) {
    return sp && !sp->s.psd.empty() ? sp->s.bin_width() : 0.0;
}

nq_status nq_spectrum_psd(const nq_spectrum* sp, double* out, size_t cap) {
    if (!sp || !out)
        return null_arg("nq_spectrum_psd");
    const size_t n = std::min(cap, sp->s.psd.size());
    std::memcpy(out, sp->s.psd.data(), n * sizeof(double));
    return NQ_OK;
}

nq_status nq_spectrum_write_csv(const nq_spectrum* sp, const char* path) {
    if (!sp || !path)
        return null_arg("nq_spectrum_write_csv");
    return guarded([&] { nyqmon::write_spectrum_csv(path, sp->s); });
}

void nq_spectrum_free(nq_spectrum* sp) {
    delete sp;
}

/* ---- rate estimation and reconstruction ------------------------------- */

nq_status nq_estimate_nyquist(const nq_series* s, double energy_fraction,
                              double* rate_out) {
    if (!s || !rate_out)
        return null_arg("nq_estimate_nyquist");
    return guarded([&] {
        const double frac =
            energy_fraction > 0.0 ? energy_fraction : nyqmon::kDefaultEnergyFraction;
        *rate_out = nyqmon::estimate_nyquist(s->us, frac).sentinel();
    });
}

nq_status nq_reconstruct(const nq_series* s, double cutoff_hz,
                         double target_rate, nq_series** out) {
    if (!s || !out)
        return null_arg("nq_reconstruct");
    return guarded([&] {
        *out = new nq_series{nyqmon::low_pass_reconstruct(s->us, cutoff_hz, target_rate)};
    });
}

nq_status nq_reconstruct_quantized(const nq_series* s, double cutoff_hz,
                                   double target_rate, double quantum,
                                   double origin, nq_series** out) {
    if (!s || !out)
        return null_arg("nq_reconstruct_quantized");
    return guarded([&] {
        *out = new nq_series{nyqmon::reconstruct_with_quantization(
            s->us, cutoff_hz, target_rate, {quantum, origin})};
    });
}

/* ---- alias detection -------------------------------------------------- */

nq_status nq_plan_dual_rates(double base_rate, double ratio, double* f1,
                             double* f2) {
    if (!f1 || !f2)
        return null_arg("nq_plan_dual_rates");
    return guarded([&] {
        const auto plan =
            nyqmon::plan_dual_rates(base_rate, ratio > 0.0 ? ratio : 1.5);
        *f1 = plan.f1;
        *f2 = plan.f2;
    });
}

nq_status nq_detect_aliasing(const nq_spectrum* fast, const nq_spectrum* slow,
                             double base_rate, double ratio, double threshold,
                             double denoise_amplitude, nq_alias_result* out) {
    if (!fast || !slow || !out)
        return null_arg("nq_detect_aliasing");
    return guarded([&] {
        const auto plan =
            nyqmon::plan_dual_rates(base_rate, ratio > 0.0 ? ratio : 1.5);
        nyqmon::AliasDetectOptions opt;
        if (threshold > 0.0)
            opt.threshold = threshold;
        opt.denoise_amplitude = denoise_amplitude > 0.0 ? denoise_amplitude : 0.0;
        const auto d = nyqmon::detect_aliasing(fast->s, slow->s, plan, opt);
        out->aliased = d.aliased ? 1 : 0;
        out->discrepancy = d.discrepancy;
        out->threshold = d.threshold;
        out->band_max_hz = d.band_max_hz;
    });
}

/* ---- synthetic scenarios ---------------------------------------------- */

nq_status nq_spec_parse(const char* text, nq_signal_spec** out) {
    if (!text || !out)
        return null_arg("nq_spec_parse");
    return guarded(
        [&] { *out = new nq_signal_spec{nyqmon::parse_signal_spec(text), {}}; });
}

nq_status nq_spec_load(const char* path, nq_signal_spec** out) {
    if (!path || !out)
        return null_arg("nq_spec_load");
    return guarded(
        [&] { *out = new nq_signal_spec{nyqmon::load_signal_spec(path), {}}; });
}

nq_status nq_spec_preset_temperature(double noise_amplitude,
                                     nq_signal_spec** out) {
    if (!out)
        return null_arg("nq_spec_preset_temperature");
    return guarded([&] {
        *out = new nq_signal_spec{nyqmon::temperature_like_preset(noise_amplitude), {}};
    });
}

const char* nq_spec_text(nq_signal_spec* sp) {
    if (!sp) {
        null_arg("nq_spec_text");
        return nullptr;
    }
    const auto st =
        guarded([&] { sp->text_cache = nyqmon::serialize_signal_spec(sp->spec); });
    return st == NQ_OK ? sp->text_cache.c_str() : nullptr;
}

nq_status nq_spec_write(nq_signal_spec* sp, const char* path) {
    if (!sp || !path)
        return null_arg("nq_spec_write");
    return guarded(
        [&] { nyqmon::atomic_write(path, nyqmon::serialize_signal_spec(sp->spec)); });
}

nq_status nq_spec_query(const nq_signal_spec* sp, double t, double* value) {
    if (!sp || !value)
        return null_arg("nq_spec_query");
    return guarded([&] { *value = nyqmon::query(sp->spec, t); });
}

nq_status nq_spec_generate(const nq_signal_spec* sp, double rate,
                           double duration, double start_time,
                           nq_series** out) {
    if (!sp || !out)
        return null_arg("nq_spec_generate");
    return guarded([&] {
        *out = new nq_series{nyqmon::generate(sp->spec, rate, duration, start_time)};
    });
}

nq_status nq_spec_true_nyquist(const nq_signal_spec* sp, double t0, double t1,
                               double* out) {
    if (!sp || !out)
        return null_arg("nq_spec_true_nyquist");
    return guarded([&] { *out = nyqmon::true_nyquist(sp->spec, t0, t1); });
}

void nq_spec_free(nq_signal_spec* sp) {
    delete sp;
}

/* ---- adaptive sampling ------------------------------------------------ */

void nq_sampler_config_init(nq_sampler_config* cfg) {
    if (!cfg)
        return;
    const nyqmon::SamplerConfig d;
    cfg->window_seconds = d.window_seconds;
    cfg->step_seconds = d.step_seconds;
    cfg->initial_rate = d.initial_rate;
    cfg->min_rate = d.min_rate;
    cfg->max_rate = d.max_rate;
    cfg->probe_factor = d.probe_factor;
    cfg->headroom = d.headroom;
    cfg->decrease_patience = d.decrease_patience;
    cfg->memory_depth = d.memory_depth;
    cfg->dual_ratio = d.dual_ratio;
    cfg->alias_threshold = d.alias_threshold;
    cfg->denoise_amplitude = d.denoise_amplitude;
    cfg->energy_fraction = d.energy_fraction;
}

nq_status nq_simulate(const nq_signal_spec* sp, const nq_sampler_config* cfg,
                      double horizon_seconds, nq_simulation** out) {
    if (!sp || !cfg || !out)
        return null_arg("nq_simulate");
    return guarded([&] {
        nyqmon::SamplerConfig c;
        c.window_seconds = cfg->window_seconds;
        c.step_seconds = cfg->step_seconds;
        c.initial_rate = cfg->initial_rate;
        c.min_rate = cfg->min_rate;
        c.max_rate = cfg->max_rate;
        c.probe_factor = cfg->probe_factor;
        c.headroom = cfg->headroom;
        c.decrease_patience = cfg->decrease_patience;
        c.memory_depth = cfg->memory_depth;
        c.dual_ratio = cfg->dual_ratio;
        c.alias_threshold = cfg->alias_threshold;
        c.denoise_amplitude = cfg->denoise_amplitude;
        c.energy_fraction = cfg->energy_fraction;
        *out = new nq_simulation{nyqmon::run_simulation(sp->spec, c, horizon_seconds)};
    });
}

size_t nq_simulation_window_count(const nq_simulation* sim) {
    return sim ? sim->r.windows.size() : 0;
}

nq_status nq_simulation_window(const nq_simulation* sim, size_t i,
                               nq_window_record* out) {
    if (!sim || !out)
        return null_arg("nq_simulation_window");
    if (i >= sim->r.windows.size()) {
        g_last_error = "nq_simulation_window: index out of range";
        return NQ_ERR_INVALID_ARGUMENT;
    }
    const auto& w = sim->r.windows[i];
    out->index = w.index;
    out->start_time = w.start_time;
    out->verdict = static_cast<int>(w.verdict);
    out->mode_after = static_cast<int>(w.mode_after);
    out->rate_before = w.rate_before;
    out->rate_after = w.rate_after;
    out->estimate_hz = w.estimate_hz;
    out->discrepancy = w.discrepancy;
    out->new_samples = w.new_samples;
    out->total_samples = w.total_samples;
    return NQ_OK;
}

size_t nq_simulation_total_cost(const nq_simulation* sim) {
    return sim ? sim->r.total_cost() : 0;
}

double nq_simulation_covered_seconds(const nq_simulation* sim) {
    return sim ? sim->r.covered_seconds : 0.0;
}

double nq_simulation_final_rate(const nq_simulation* sim) {
    return sim ? sim->r.final_rate : 0.0;
}

int nq_simulation_final_mode(const nq_simulation* sim) {
    return sim ? static_cast<int>(sim->r.final_mode) : NQ_MODE_PROBE;
}

nq_status nq_simulation_write_log_csv(const nq_simulation* sim,
                                      const char* path) {
    if (!sim || !path)
        return null_arg("nq_simulation_write_log_csv");
    return guarded(
        [&] { nyqmon::atomic_write(path, nyqmon::format_log_csv(sim->r)); });
}

nq_status nq_simulation_write_samples_csv(const nq_simulation* sim,
                                          const char* path) {
    if (!sim || !path)
        return null_arg("nq_simulation_write_samples_csv");
    return guarded([&] {
        nyqmon::TimeSeries ts;
        ts.metric_name = "sampled";
        ts.points = sim->r.samples;
        nyqmon::write_trace_csv(path, ts);
    });
}

void nq_simulation_free(nq_simulation* sim) {
    delete sim;
}

/* ---- trace reports ---------------------------------------------------- */

void nq_report_options_init(nq_report_options* opt) {
    if (!opt)
        return;
    const nyqmon::ReportOptions d;
    opt->energy_fraction = d.energy_fraction;
    opt->max_gap_multiple = d.max_gap_multiple;
    opt->rate_hint = d.rate_hint;
    opt->window_seconds = d.window_seconds;
}

nq_status nq_analyze_trace(const nq_trace* t, const nq_report_options* opt,
                           nq_trace_report* out) {
    if (!t || !out)
        return null_arg("nq_analyze_trace");
    return guarded([&] {
        fill_report(nyqmon::analyze_series(t->ts, map_options(opt)), out);
    });
}

nq_status nq_analyze_file(const char* path, const nq_report_options* opt,
                          nq_trace_report* out) {
    if (!path || !out)
        return null_arg("nq_analyze_file");
    return guarded([&] {
        fill_report(nyqmon::analyze_trace_file(path, map_options(opt)), out);
    });
}

nq_status nq_batch_report(const char* const* paths, size_t n,
                          const nq_report_options* opt, nq_report_set** out) {
    if (!paths || !out)
        return null_arg("nq_batch_report");
    return guarded([&] {
        std::vector<std::string> v;
        v.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (!paths[i])
                nyqmon::fail(nyqmon::errc::invalid_argument, "batch: null path");
            v.emplace_back(paths[i]);
        }
        *out = new nq_report_set{nyqmon::batch_report(v, map_options(opt))};
    });
}

size_t nq_report_count(const nq_report_set* r) {
    return r ? r->set.reports.size() : 0;
}

nq_status nq_report_entry(const nq_report_set* r, size_t i,
                          nq_trace_report* out) {
    if (!r || !out)
        return null_arg("nq_report_entry");
    if (i >= r->set.reports.size()) {
        g_last_error = "nq_report_entry: index out of range";
        return NQ_ERR_INVALID_ARGUMENT;
    }
    fill_report(r->set.reports[i], out);
    return NQ_OK;
}

const char* nq_report_entry_path(const nq_report_set* r, size_t i) {
    return r && i < r->set.reports.size() ? r->set.reports[i].path.c_str() : nullptr;
}

const char* nq_report_entry_metric(const nq_report_set* r, size_t i) {
    return r && i < r->set.reports.size() ? r->set.reports[i].metric_name.c_str()
                                          : nullptr;
}

const char* nq_report_entry_device(const nq_report_set* r, size_t i) {
    return r && i < r->set.reports.size() ? r->set.reports[i].device_id.c_str()
                                          : nullptr;
}

size_t nq_report_skipped_count(const nq_report_set* r) {
    return r ? r->set.skipped.size() : 0;
}

const char* nq_report_skipped_path(const nq_report_set* r, size_t i) {
    return r && i < r->set.skipped.size() ? r->set.skipped[i].path.c_str() : nullptr;
}

const char* nq_report_skipped_reason(const nq_report_set* r, size_t i) {
    return r && i < r->set.skipped.size() ? r->set.skipped[i].reason.c_str()
                                          : nullptr;
}

nq_status nq_report_write_json(const nq_report_set* r, const char* path) {
    if (!r || !path)
        return null_arg("nq_report_write_json");
    return guarded(
        [&] { nyqmon::atomic_write(path, nyqmon::format_report_json(r->set)); });
}

nq_status nq_report_write_cdf_csv(const nq_report_set* r, const char* path) {
    if (!r || !path)
        return null_arg("nq_report_write_cdf_csv");
    return guarded(
        [&] { nyqmon::atomic_write(path, nyqmon::format_ratio_cdf_csv(r->set)); });
}

void nq_report_free(nq_report_set* r) {
    delete r;
}

} // extern "C"

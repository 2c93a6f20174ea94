// Command-line front end. Talks to the engine exclusively through the C API
// in nyqmon.h, exactly like any external embedder would.

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nyqmon.h"

namespace {

[[noreturn]] void die(nq_status st) {
    std::fprintf(stderr, "error: %s (%s)\n", nq_last_error(), nq_status_name(st));
    std::exit(1);
}

void check(nq_status st) {
    if (st != NQ_OK)
        die(st);
}

// RAII for the C handles so early exits don't leak.
template <auto F>
struct fn_deleter {
    template <typename T>
    void operator()(T* p) const {
        F(p);
    }
};
using trace_h = std::unique_ptr<nq_trace, fn_deleter<nq_trace_free>>;
using series_h = std::unique_ptr<nq_series, fn_deleter<nq_series_free>>;
using spectrum_h = std::unique_ptr<nq_spectrum, fn_deleter<nq_spectrum_free>>;
using spec_h = std::unique_ptr<nq_signal_spec, fn_deleter<nq_spec_free>>;
using sim_h = std::unique_ptr<nq_simulation, fn_deleter<nq_simulation_free>>;
using report_h = std::unique_ptr<nq_report_set, fn_deleter<nq_report_free>>;

spec_h load_scenario(const std::string& spec_path, const std::string& preset,
                     double preset_noise) {
    nq_signal_spec* sp = nullptr;
    if (!spec_path.empty()) {
        check(nq_spec_load(spec_path.c_str(), &sp));
    } else if (preset == "temperature-like") {
        check(nq_spec_preset_temperature(preset_noise, &sp));
    } else {
        std::fprintf(stderr, "error: need --spec FILE or --preset temperature-like\n");
        std::exit(1);
    }
    return spec_h(sp);
}

std::string describe_verdict(const nq_trace_report& r) {
    char buf[64];
    if (r.aliased)
        return "ALIASED (rate too low to tell)";
    if (r.degenerate)
        return "flat (any rate suffices)";
    std::snprintf(buf, sizeof buf, "%g Hz", r.nyquist_hz);
    return buf;
}

int cmd_analyze(const std::vector<std::string>& paths, double fraction,
                double max_gap, double rate_hint, double window_s,
                const std::string& json_out, const std::string& cdf_out,
                const std::string& spectrum_out) {
    nq_report_options opt;
    nq_report_options_init(&opt);
    if (fraction > 0)
        opt.energy_fraction = fraction;
    if (max_gap > 0)
        opt.max_gap_multiple = max_gap;
    if (rate_hint > 0)
        opt.rate_hint = rate_hint;
    if (window_s > 0)
        opt.window_seconds = window_s;

    std::vector<const char*> cpaths;
    for (const auto& p : paths)
        cpaths.push_back(p.c_str());
    nq_report_set* raw = nullptr;
    check(nq_batch_report(cpaths.data(), cpaths.size(), &opt, &raw));
    report_h set(raw);

    for (size_t i = 0; i < nq_report_count(set.get()); ++i) {
        nq_trace_report r;
        check(nq_report_entry(set.get(), i, &r));
        const char* metric = nq_report_entry_metric(set.get(), i);
        const char* device = nq_report_entry_device(set.get(), i);
        std::printf("%s\n", nq_report_entry_path(set.get(), i));
        std::printf("  metric=%s device=%s points=%zu analyzed=%zu\n",
                    metric && *metric ? metric : "?", device && *device ? device : "?",
                    r.points_in_trace, r.samples_analyzed);
        std::printf("  actual rate: %g Hz, required rate: %s\n", r.actual_rate_hz,
                    describe_verdict(r).c_str());
        if (r.oversampling_ratio > 0)
            std::printf("  oversampling: %.3gx\n", r.oversampling_ratio);
        if (r.windows_total > 1)
            std::printf("  windows: %zu (%zu aliased)\n", r.windows_total,
                        r.windows_aliased);
    }
    for (size_t i = 0; i < nq_report_skipped_count(set.get()); ++i)
        std::printf("%s\n  SKIPPED: %s\n", nq_report_skipped_path(set.get(), i),
                    nq_report_skipped_reason(set.get(), i));
    std::printf("%zu analyzed, %zu skipped\n", nq_report_count(set.get()),
                nq_report_skipped_count(set.get()));

    if (!json_out.empty()) {
        check(nq_report_write_json(set.get(), json_out.c_str()));
        std::printf("report: %s\n", json_out.c_str());
    }
    if (!cdf_out.empty()) {
        check(nq_report_write_cdf_csv(set.get(), cdf_out.c_str()));
        std::printf("ratio cdf: %s\n", cdf_out.c_str());
    }
    if (!spectrum_out.empty()) {
        if (paths.size() != 1) {
            std::fprintf(stderr, "error: --spectrum-csv needs exactly one input trace\n");
            return 1;
        }
        nq_trace* traw = nullptr;
        check(nq_trace_load_csv(paths[0].c_str(), &traw));
        trace_h t(traw);
        nq_trace_report r;
        check(nq_report_entry(set.get(), 0, &r));
        nq_series* sraw = nullptr;
        check(nq_trace_regularize(t.get(), r.actual_rate_hz, opt.max_gap_multiple, &sraw));
        series_h s(sraw);
        nq_spectrum* spraw = nullptr;
        check(nq_series_dft(s.get(), &spraw));
        spectrum_h sp(spraw);
        check(nq_spectrum_write_csv(sp.get(), spectrum_out.c_str()));
        std::printf("spectrum: %s\n", spectrum_out.c_str());
    }
    return 0;
}

int cmd_roundtrip(const std::string& path, double fraction, double max_gap,
                  double rate_hint, double cutoff_opt, double quantum,
                  double origin, const std::string& out,
                  const std::string& dec_out) {
    nq_trace* traw = nullptr;
    check(nq_trace_load_csv(path.c_str(), &traw));
    trace_h t(traw);

    nq_report_options opt;
    nq_report_options_init(&opt);
    if (max_gap > 0)
        opt.max_gap_multiple = max_gap;
    nq_trace_report rep;
    if (rate_hint > 0)
        opt.rate_hint = rate_hint;
    if (fraction > 0)
        opt.energy_fraction = fraction;
    check(nq_analyze_trace(t.get(), &opt, &rep));

    nq_series* sraw = nullptr;
    check(nq_trace_regularize(t.get(), rep.actual_rate_hz, opt.max_gap_multiple, &sraw));
    series_h original(sraw);
    const double orig_rate = nq_series_rate(original.get());

    double cutoff = cutoff_opt;
    if (cutoff <= 0) {
        if (rep.aliased) {
            std::fprintf(stderr,
                         "error: trace is ALIASED at its own rate; the stored samples "
                         "cannot bound the band. Re-capture faster or force --cutoff.\n");
            return 1;
        }
        if (rep.degenerate) {
            std::printf("trace is flat; nothing to decimate away\n");
            return 0;
        }
        cutoff = rep.nyquist_hz / 2.0;
    }
    const double dec_rate = 2.0 * cutoff;

    std::printf("%s: rate %g Hz, keeping content below %g Hz\n", path.c_str(),
                orig_rate, cutoff);

    nq_series* draw = nullptr;
    check(nq_series_decimate(original.get(), dec_rate, &draw));
    series_h dec(draw);

    series_h stored;
    series_h reference;
    if (quantum > 0) {
        nq_series* q1 = nullptr;
        check(nq_series_quantize(dec.get(), quantum, origin, &q1));
        stored.reset(q1);
        nq_series* q2 = nullptr;
        check(nq_series_quantize(original.get(), quantum, origin, &q2));
        reference.reset(q2);
    }
    const nq_series* source = quantum > 0 ? stored.get() : dec.get();
    const nq_series* ref = quantum > 0 ? reference.get() : original.get();

    nq_series* rraw = nullptr;
    if (quantum > 0)
        check(nq_reconstruct_quantized(source, cutoff, orig_rate, quantum, origin, &rraw));
    else
        check(nq_reconstruct(source, cutoff, orig_rate, &rraw));
    series_h recon(rraw);

    double dist = 0.0;
    check(nq_series_l2_distance(recon.get(), ref, &dist));
    const size_t n_orig = nq_series_size(original.get());
    const size_t n_dec = nq_series_size(dec.get());
    const double rms = n_orig ? dist / std::sqrt(static_cast<double>(n_orig)) : 0.0;
    std::printf("samples: %zu -> %zu (%.3gx fewer)\n", n_orig, n_dec,
                n_dec ? static_cast<double>(n_orig) / static_cast<double>(n_dec) : 0.0);
    std::printf("recovery error: L2 %.6g, per-sample RMS %.6g%s\n", dist, rms,
                dist == 0.0 ? " (exact)" : "");

    if (!dec_out.empty()) {
        check(nq_series_write_csv(source, dec_out.c_str()));
        std::printf("decimated: %s\n", dec_out.c_str());
    }
    if (!out.empty()) {
        check(nq_series_write_csv(recon.get(), out.c_str()));
        std::printf("reconstructed: %s\n", out.c_str());
    }
    return 0;
}

int cmd_simulate(const spec_h& sp, double horizon, const nq_sampler_config& cfg,
                 const std::string& log_out, const std::string& samples_out,
                 bool verbose) {
    nq_simulation* raw = nullptr;
    check(nq_simulate(sp.get(), &cfg, horizon, &raw));
    sim_h sim(raw);

    const size_t wins = nq_simulation_window_count(sim.get());
    if (verbose) {
        static const char* verdicts[] = {"clean", "aliased", "degenerate", "short"};
        static const char* modes[] = {"probe", "steady"};
        for (size_t i = 0; i < wins; ++i) {
            nq_window_record w;
            check(nq_simulation_window(sim.get(), i, &w));
            std::printf("window %zu @ %g s: %s, rate %g -> %g Hz (est %g), mode %s\n",
                        w.index, w.start_time, verdicts[w.verdict], w.rate_before,
                        w.rate_after, w.estimate_hz, modes[w.mode_after]);
        }
    }

    const size_t cost = nq_simulation_total_cost(sim.get());
    const double covered = nq_simulation_covered_seconds(sim.get());
    const double final_rate = nq_simulation_final_rate(sim.get());
    const double baseline = cfg.initial_rate * covered;
    std::printf("windows analyzed: %zu\n", wins);
    std::printf("final rate: %g Hz (%s)\n", final_rate,
                nq_simulation_final_mode(sim.get()) == NQ_MODE_STEADY ? "steady"
                                                                      : "probe");
    std::printf("total samples: %zu over %g s (avg %.4g Hz)\n", cost, covered,
                covered > 0 ? static_cast<double>(cost) / covered : 0.0);
    std::printf("static baseline at initial rate %g Hz: %g samples\n",
                cfg.initial_rate, baseline);
    if (baseline > 0)
        std::printf("cost ratio vs baseline: %.4g\n",
                    static_cast<double>(cost) / baseline);

    if (!log_out.empty()) {
        check(nq_simulation_write_log_csv(sim.get(), log_out.c_str()));
        std::printf("log: %s\n", log_out.c_str());
    }
    if (!samples_out.empty()) {
        check(nq_simulation_write_samples_csv(sim.get(), samples_out.c_str()));
        std::printf("samples: %s\n", samples_out.c_str());
    }
    return 0;
}

int cmd_detect_synthetic(const spec_h& sp, double base_rate, double ratio,
                         double window_s, double start, double threshold,
                         double denoise) {
    double f1 = 0, f2 = 0;
    check(nq_plan_dual_rates(base_rate, ratio, &f1, &f2));
    nq_series* fraw = nullptr;
    check(nq_spec_generate(sp.get(), f1, window_s, start, &fraw));
    series_h fast(fraw);
    nq_series* slraw = nullptr;
    check(nq_spec_generate(sp.get(), f2, window_s, start, &slraw));
    series_h slow(slraw);

    nq_spectrum* sf = nullptr;
    check(nq_series_dft(fast.get(), &sf));
    spectrum_h fast_spec(sf);
    nq_spectrum* ss = nullptr;
    check(nq_series_dft(slow.get(), &ss));
    spectrum_h slow_spec(ss);

    nq_alias_result res;
    check(nq_detect_aliasing(fast_spec.get(), slow_spec.get(), base_rate, ratio,
                             threshold, denoise, &res));
    std::printf("streams: %g Hz and %g Hz over %g s\n", f1, f2, window_s);
    std::printf("discrepancy %.4g vs threshold %g on (0, %g] Hz\n", res.discrepancy,
                res.threshold, res.band_max_hz);
    std::printf("verdict: %s\n", res.aliased ? "ALIASED" : "clean");
    return 0;
}

int cmd_detect_traces(const std::string& fast_path, const std::string& slow_path,
                      double base_rate, double ratio_opt, double threshold,
                      double denoise) {
    nq_trace_report fast_rep, slow_rep;
    nq_report_options opt;
    nq_report_options_init(&opt);

    nq_trace* traw = nullptr;
    check(nq_trace_load_csv(fast_path.c_str(), &traw));
    trace_h fast_t(traw);
    check(nq_trace_load_csv(slow_path.c_str(), &traw));
    trace_h slow_t(traw);
    check(nq_analyze_trace(fast_t.get(), &opt, &fast_rep));
    check(nq_analyze_trace(slow_t.get(), &opt, &slow_rep));

    const double base = base_rate > 0 ? base_rate : slow_rep.actual_rate_hz;
    const double ratio =
        ratio_opt > 0 ? ratio_opt : fast_rep.actual_rate_hz / base;

    nq_series* sraw = nullptr;
    check(nq_trace_regularize(fast_t.get(), fast_rep.actual_rate_hz, 0, &sraw));
    series_h fast(sraw);
    check(nq_trace_regularize(slow_t.get(), slow_rep.actual_rate_hz, 0, &sraw));
    series_h slow(sraw);

    nq_spectrum* spraw = nullptr;
    check(nq_series_dft(fast.get(), &spraw));
    spectrum_h fast_spec(spraw);
    check(nq_series_dft(slow.get(), &spraw));
    spectrum_h slow_spec(spraw);

    nq_alias_result res;
    check(nq_detect_aliasing(fast_spec.get(), slow_spec.get(), base, ratio,
                             threshold, denoise, &res));
    std::printf("streams: %g Hz (%s) and %g Hz (%s)\n", fast_rep.actual_rate_hz,
                fast_path.c_str(), slow_rep.actual_rate_hz, slow_path.c_str());
    std::printf("discrepancy %.4g vs threshold %g on (0, %g] Hz\n", res.discrepancy,
                res.threshold, res.band_max_hz);
    std::printf("verdict: %s\n", res.aliased ? "ALIASED" : "clean");
    return 0;
}

int cmd_generate(const spec_h& sp, double rate, double duration, double start,
                 double quantum, double origin, const std::string& out,
                 const std::string& spec_out) {
    nq_series* raw = nullptr;
    check(nq_spec_generate(sp.get(), rate, duration, start, &raw));
    series_h s(raw);
    if (quantum > 0) {
        nq_series* q = nullptr;
        check(nq_series_quantize(s.get(), quantum, origin, &q));
        s.reset(q);
    }
    check(nq_series_write_csv(s.get(), out.c_str()));
    std::printf("%zu samples at %g Hz: %s\n", nq_series_size(s.get()), rate,
                out.c_str());
    if (!spec_out.empty()) {
        check(nq_spec_write(sp.get(), spec_out.c_str()));
        std::printf("scenario: %s\n", spec_out.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sampling-rate analysis for telemetry traces"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Estimate required rates for trace CSVs");
    std::vector<std::string> an_paths;
    double an_fraction = 0, an_max_gap = 0, an_rate = 0, an_window = 0;
    std::string an_json, an_cdf, an_spectrum;
    analyze->add_option("paths", an_paths, "trace CSV files")->required();
    analyze->add_option("--fraction", an_fraction, "energy fraction (default 0.99)");
    analyze->add_option("--max-gap", an_max_gap, "max gap in sample intervals (default 10)");
    analyze->add_option("--rate", an_rate, "grid rate override in Hz");
    analyze->add_option("--window", an_window, "analysis window in seconds (default: whole trace)");
    analyze->add_option("--json", an_json, "write the full report as JSON");
    analyze->add_option("--cdf-csv", an_cdf, "write oversampling-ratio CDF CSV");
    analyze->add_option("--spectrum-csv", an_spectrum, "write the trace spectrum (single trace)");

    // roundtrip
    auto* roundtrip = app.add_subcommand(
        "roundtrip", "Decimate to the required rate and measure recovery error");
    std::string rt_path, rt_out, rt_dec_out;
    double rt_fraction = 0, rt_max_gap = 0, rt_rate = 0, rt_cutoff = 0;
    double rt_quantum = 0, rt_origin = 0;
    roundtrip->add_option("path", rt_path, "trace CSV file")->required();
    roundtrip->add_option("--fraction", rt_fraction, "energy fraction (default 0.99)");
    roundtrip->add_option("--max-gap", rt_max_gap, "max gap in sample intervals");
    roundtrip->add_option("--rate", rt_rate, "grid rate override in Hz");
    roundtrip->add_option("--cutoff", rt_cutoff,
                          "keep content below this frequency (default: half the estimate)");
    roundtrip->add_option("--quantum", rt_quantum, "storage quantization step");
    roundtrip->add_option("--origin", rt_origin, "quantization grid origin");
    roundtrip->add_option("--out", rt_out, "write the reconstruction CSV");
    roundtrip->add_option("--decimated-out", rt_dec_out, "write the decimated CSV");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run the adaptive sampler on a scenario");
    std::string sim_spec, sim_preset, sim_log, sim_samples;
    double sim_noise = 0, sim_horizon = 0;
    bool sim_verbose = false;
    nq_sampler_config cfg;
    nq_sampler_config_init(&cfg);
    int sim_patience = cfg.decrease_patience;
    size_t sim_memory = cfg.memory_depth;
    simulate->add_option("--spec", sim_spec, "scenario file");
    simulate->add_option("--preset", sim_preset, "built-in scenario (temperature-like)");
    simulate->add_option("--noise", sim_noise, "noise amplitude for --preset");
    simulate->add_option("--horizon", sim_horizon, "simulated seconds")->required();
    simulate->add_option("--window", cfg.window_seconds, "analysis window seconds");
    simulate->add_option("--step", cfg.step_seconds, "decision cadence seconds");
    simulate->add_option("--initial-rate", cfg.initial_rate, "starting rate Hz");
    simulate->add_option("--min-rate", cfg.min_rate, "rate floor Hz");
    simulate->add_option("--max-rate", cfg.max_rate, "rate ceiling Hz");
    simulate->add_option("--probe-factor", cfg.probe_factor, "rate multiplier while aliased");
    simulate->add_option("--headroom", cfg.headroom, "margin over the estimate");
    simulate->add_option("--patience", sim_patience, "clean windows before decreasing");
    simulate->add_option("--memory", sim_memory, "remembered window count");
    simulate->add_option("--ratio", cfg.dual_ratio, "dual-rate ratio (non-integer)");
    simulate->add_option("--threshold", cfg.alias_threshold, "alias discrepancy threshold");
    simulate->add_option("--denoise", cfg.denoise_amplitude, "spectral amplitude floor");
    simulate->add_option("--fraction", cfg.energy_fraction, "energy fraction");
    simulate->add_option("--log", sim_log, "write per-window decision CSV");
    simulate->add_option("--samples", sim_samples, "write collected samples CSV");
    simulate->add_flag("--verbose", sim_verbose, "print every window");

    // detect-alias
    auto* detect = app.add_subcommand("detect-alias",
                                      "Compare dual-rate streams for folding");
    std::string da_spec, da_preset, da_fast, da_slow;
    double da_noise = 0, da_base = 0, da_ratio = 0, da_window = 60, da_start = 0;
    double da_threshold = 0, da_denoise = 0;
    detect->add_option("--spec", da_spec, "scenario file (synthetic mode)");
    detect->add_option("--preset", da_preset, "built-in scenario (temperature-like)");
    detect->add_option("--noise", da_noise, "noise amplitude for --preset");
    detect->add_option("--fast", da_fast, "fast-stream trace CSV");
    detect->add_option("--slow", da_slow, "slow-stream trace CSV");
    detect->add_option("--base-rate", da_base, "rate under test (synthetic mode: required)");
    detect->add_option("--ratio", da_ratio, "fast/slow rate ratio (default 1.5)");
    detect->add_option("--window", da_window, "synthetic window seconds (default 60)");
    detect->add_option("--start", da_start, "synthetic window start time");
    detect->add_option("--threshold", da_threshold, "discrepancy threshold (default 0.1)");
    detect->add_option("--denoise", da_denoise, "spectral amplitude floor");

    // generate
    auto* generate = app.add_subcommand("generate", "Sample a scenario into a trace CSV");
    std::string gen_spec, gen_preset, gen_out, gen_spec_out;
    double gen_noise = 0, gen_rate = 0, gen_duration = 0, gen_start = 0;
    double gen_quantum = 0, gen_origin = 0;
    generate->add_option("--spec", gen_spec, "scenario file");
    generate->add_option("--preset", gen_preset, "built-in scenario (temperature-like)");
    generate->add_option("--noise", gen_noise, "noise amplitude for --preset");
    generate->add_option("--rate", gen_rate, "sampling rate Hz")->required();
    generate->add_option("--duration", gen_duration, "seconds to generate")->required();
    generate->add_option("--start", gen_start, "first sample time");
    generate->add_option("--quantum", gen_quantum, "storage quantization step");
    generate->add_option("--origin", gen_origin, "quantization grid origin");
    generate->add_option("--out", gen_out, "output trace CSV")->required();
    generate->add_option("--spec-out", gen_spec_out, "also write the scenario text");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed())
        return cmd_analyze(an_paths, an_fraction, an_max_gap, an_rate, an_window,
                           an_json, an_cdf, an_spectrum);
    if (roundtrip->parsed())
        return cmd_roundtrip(rt_path, rt_fraction, rt_max_gap, rt_rate, rt_cutoff,
                             rt_quantum, rt_origin, rt_out, rt_dec_out);
    if (simulate->parsed()) {
        cfg.decrease_patience = sim_patience;
        cfg.memory_depth = sim_memory;
        const auto sp = load_scenario(sim_spec, sim_preset, sim_noise);
        return cmd_simulate(sp, sim_horizon, cfg, sim_log, sim_samples, sim_verbose);
    }
    if (detect->parsed()) {
        if (!da_fast.empty() || !da_slow.empty()) {
            if (da_fast.empty() || da_slow.empty()) {
                std::fprintf(stderr, "error: trace mode needs both --fast and --slow\n");
                return 1;
            }
            return cmd_detect_traces(da_fast, da_slow, da_base, da_ratio,
                                     da_threshold, da_denoise);
        }
        if (da_base <= 0) {
            std::fprintf(stderr, "error: synthetic mode needs --base-rate\n");
            return 1;
        }
        const auto sp = load_scenario(da_spec, da_preset, da_noise);
        return cmd_detect_synthetic(sp, da_base, da_ratio > 0 ? da_ratio : 1.5,
                                    da_window, da_start, da_threshold, da_denoise);
    }
    if (generate->parsed()) {
        const auto sp = load_scenario(gen_spec, gen_preset, gen_noise);
        return cmd_generate(sp, gen_rate, gen_duration, gen_start, gen_quantum,
                            gen_origin, gen_out, gen_spec_out);
    }
    return 1;
}

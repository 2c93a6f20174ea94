#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nyqmon.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("nyqmon-capi-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<double> tone_values(double freq, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = std::sin(2.0 * std::numbers::pi * freq * static_cast<double>(i));
    return v;
}

nq_trace* make_tone_trace(const char* metric, const char* device, double freq,
                          std::size_t n = 16) {
    std::vector<double> ts(n), vs = tone_values(freq, n);
    for (std::size_t i = 0; i < n; ++i)
        ts[i] = static_cast<double>(i);
    nq_trace* t = nullptr;
    REQUIRE(nq_trace_create(ts.data(), vs.data(), n, &t) == NQ_OK);
    REQUIRE(nq_trace_set_meta(t, metric, device, nullptr) == NQ_OK);
    return t;
}

} // namespace

TEST_SUITE("capi") {

TEST_CASE("status names and version are stable strings") {
    CHECK(nq_version() != nullptr);
    CHECK(std::string(nq_status_name(NQ_OK)) == "Ok");
    CHECK(std::string(nq_status_name(NQ_ERR_INVALID_ARGUMENT)) == "InvalidArgument");
    CHECK(nq_status_name(NQ_ERR_UNKNOWN) != nullptr);
    CHECK(nq_last_error() != nullptr);
}

TEST_CASE("null pointers are reported, not dereferenced") {
    CHECK(nq_trace_create(nullptr, nullptr, 0, nullptr) == NQ_ERR_NULL_POINTER);
    CHECK(std::string(nq_last_error()).find("nq_trace_create") != std::string::npos);
    CHECK(nq_estimate_nyquist(nullptr, 0.0, nullptr) == NQ_ERR_NULL_POINTER);
    CHECK(nq_detect_aliasing(nullptr, nullptr, 1.0, 0, 0, 0, nullptr) ==
          NQ_ERR_NULL_POINTER);
    nq_trace_free(nullptr); // frees must tolerate NULL
    nq_series_free(nullptr);
    nq_spectrum_free(nullptr);
    nq_spec_free(nullptr);
    nq_simulation_free(nullptr);
    nq_report_free(nullptr);
}

TEST_CASE("trace handles round-trip points, metadata and files") {
    TempDir dir;
    const double ts[] = {0.0, 1.0, 2.0, 3.0};
    const double vs[] = {1.5, 2.5, 3.5, 4.5};
    nq_trace* t = nullptr;
    REQUIRE(nq_trace_create(ts, vs, 4, &t) == NQ_OK);
    CHECK(nq_trace_size(t) == 4);
    double at = 0, av = 0;
    REQUIRE(nq_trace_point(t, 1, &at, &av) == NQ_OK);
    CHECK(at == 1.0);
    CHECK(av == 2.5);
    CHECK(nq_trace_point(t, 9, &at, &av) == NQ_ERR_INVALID_ARGUMENT);

    REQUIRE(nq_trace_set_meta(t, "cpu_usage", "host7", "percent") == NQ_OK);
    CHECK(std::string(nq_trace_metric(t)) == "cpu_usage");
    CHECK(std::string(nq_trace_device(t)) == "host7");
    CHECK(std::string(nq_trace_unit(t)) == "percent");

    const auto path = dir.file("trace.csv");
    REQUIRE(nq_trace_write_csv(t, path.c_str()) == NQ_OK);
    nq_trace* back = nullptr;
    REQUIRE(nq_trace_load_csv(path.c_str(), &back) == NQ_OK);
    CHECK(nq_trace_size(back) == 4);
    CHECK(std::string(nq_trace_metric(back)) == "cpu_usage");
    REQUIRE(nq_trace_point(back, 3, &at, &av) == NQ_OK);
    CHECK(at == 3.0);
    CHECK(av == 4.5);
    nq_trace_free(back);
    nq_trace_free(t);
}

TEST_CASE("trace validation and io failures map onto distinct codes") {
    const double bad_ts[] = {1.0, 1.0};
    const double vals[] = {1.0, 2.0};
    nq_trace* t = nullptr;
    CHECK(nq_trace_create(bad_ts, vals, 2, &t) == NQ_ERR_NON_MONOTONE_TIMESTAMPS);
    CHECK(nq_trace_load_csv("/no/such/dir/x.csv", &t) == NQ_ERR_IO);
    CHECK(std::string(nq_last_error()).find("x.csv") != std::string::npos);
}

TEST_CASE("series, spectrum and estimate agree with the closed forms") {
    const auto vals = tone_values(0.25, 16);
    nq_series* s = nullptr;
    REQUIRE(nq_series_create(0.0, 1.0, vals.data(), 16, &s) == NQ_OK);
    CHECK(nq_series_size(s) == 16);
    CHECK(nq_series_rate(s) == 1.0);
    CHECK(nq_series_start_time(s) == 0.0);

    double head[4] = {};
    REQUIRE(nq_series_values(s, head, 4) == NQ_OK);
    for (int i = 0; i < 4; ++i)
        CHECK(head[i] == vals[static_cast<std::size_t>(i)]);

    nq_spectrum* sp = nullptr;
    REQUIRE(nq_series_dft(s, &sp) == NQ_OK);
    CHECK(nq_spectrum_bins(sp) == 16);
    CHECK(nq_spectrum_bin_width(sp) == doctest::Approx(1.0 / 16.0));
    double psd[16] = {};
    REQUIRE(nq_spectrum_psd(sp, psd, 16) == NQ_OK);
    CHECK(psd[4] == doctest::Approx(64.0)); // (N*amp/2)^2 at the tone bin
    CHECK(psd[3] == doctest::Approx(0.0));

    nq_series* inv = nullptr;
    REQUIRE(nq_spectrum_inverse(sp, &inv) == NQ_OK);
    double dist = -1.0;
    REQUIRE(nq_series_l2_distance(s, inv, &dist) == NQ_OK);
    CHECK(dist <= 1e-9);

    double rate = 0.0;
    REQUIRE(nq_estimate_nyquist(s, 0.0, &rate) == NQ_OK);
    CHECK(rate == 0.5);

    nq_series_free(inv);
    nq_spectrum_free(sp);
    nq_series_free(s);
}

TEST_CASE("flat series and folded series are told apart by the estimator") {
    std::vector<double> flat(32, 5.0);
    nq_series* s = nullptr;
    REQUIRE(nq_series_create(0.0, 1.0, flat.data(), flat.size(), &s) == NQ_OK);
    double rate = 0.0;
    CHECK(nq_estimate_nyquist(s, 0.0, &rate) == NQ_ERR_DEGENERATE_SIGNAL);
    nq_series_free(s);

    nq_signal_spec* spec = nullptr;
    REQUIRE(nq_spec_parse("component 1.984375 1\n", &spec) == NQ_OK);
    nq_series* edge = nullptr;
    REQUIRE(nq_spec_generate(spec, 4.0, 64.0, 0.0, &edge) == NQ_OK);
    REQUIRE(nq_estimate_nyquist(edge, 0.0, &rate) == NQ_OK);
    CHECK(rate == -1.0); // energy pinned at the top of the band: no answer
    nq_series_free(edge);
    nq_spec_free(spec);
}

TEST_CASE("a quantized decimation recovers the stored readings exactly") {
    nq_signal_spec* spec = nullptr;
    REQUIRE(nq_spec_parse("offset 10\ncomponent 1 2 1.5707963267948966\n",
                          &spec) == NQ_OK);
    nq_series* raw = nullptr;
    REQUIRE(nq_spec_generate(spec, 4.0, 4.0, 0.0, &raw) == NQ_OK);
    CHECK(nq_series_size(raw) == 16);
    // What a collector would keep: readings snapped to a 0.5 grid.
    nq_series* stored = nullptr;
    REQUIRE(nq_series_quantize(raw, 0.5, 0.0, &stored) == NQ_OK);

    nq_series* dec = nullptr;
    REQUIRE(nq_series_decimate(stored, 2.0, &dec) == NQ_OK);
    CHECK(nq_series_size(dec) == 8);

    nq_series* rec = nullptr;
    REQUIRE(nq_reconstruct_quantized(dec, 1.0, 4.0, 0.5, 0.0, &rec) == NQ_OK);
    CHECK(nq_series_size(rec) == 16);
    double dist = -1.0;
    REQUIRE(nq_series_l2_distance(stored, rec, &dist) == NQ_OK);
    CHECK(dist == 0.0);

    nq_series* bad = nullptr;
    CHECK(nq_reconstruct(dec, 3.0, 4.0, &bad) == NQ_ERR_INVALID_CUTOFF);

    nq_series_free(rec);
    nq_series_free(dec);
    nq_series_free(stored);
    nq_series_free(raw);
    nq_spec_free(spec);
}

TEST_CASE("dual-rate planning and detection work through the boundary") {
    double f1 = 0, f2 = 0;
    REQUIRE(nq_plan_dual_rates(2.0, 0.0, &f1, &f2) == NQ_OK);
    CHECK(f1 == 3.0); // default ratio 1.5
    CHECK(f2 == 2.0);
    CHECK(nq_plan_dual_rates(2.0, 2.0, &f1, &f2) == NQ_ERR_INTEGER_RATIO);

    nq_signal_spec* folded = nullptr;
    REQUIRE(nq_spec_parse("component 1.2 1\n", &folded) == NQ_OK);
    nq_series *fast_s = nullptr, *slow_s = nullptr;
    REQUIRE(nq_spec_generate(folded, 3.0, 40.0, 0.0, &fast_s) == NQ_OK);
    REQUIRE(nq_spec_generate(folded, 2.0, 40.0, 0.0, &slow_s) == NQ_OK);
    nq_spectrum *fast_sp = nullptr, *slow_sp = nullptr;
    REQUIRE(nq_series_dft(fast_s, &fast_sp) == NQ_OK);
    REQUIRE(nq_series_dft(slow_s, &slow_sp) == NQ_OK);

    nq_alias_result res = {};
    REQUIRE(nq_detect_aliasing(fast_sp, slow_sp, 2.0, 0.0, 0.0, 0.0, &res) == NQ_OK);
    CHECK(res.aliased == 1);
    CHECK(res.discrepancy == doctest::Approx(1.0));
    CHECK(res.threshold == 0.1);
    CHECK(res.band_max_hz == 1.0);

    CHECK(nq_detect_aliasing(slow_sp, slow_sp, 2.0, 0.0, 0.0, 0.0, &res) ==
          NQ_ERR_RATE_MISMATCH);

    nq_spectrum_free(fast_sp);
    nq_spectrum_free(slow_sp);
    nq_series_free(fast_s);
    nq_series_free(slow_s);
    nq_spec_free(folded);
}

TEST_CASE("scenario text parses, serializes and queries") {
    nq_signal_spec* bad = nullptr;
    CHECK(nq_spec_parse("component nonsense\n", &bad) == NQ_ERR_PARSE);
    CHECK(std::string(nq_last_error()).find("line 1") != std::string::npos);

    nq_signal_spec* sp = nullptr;
    REQUIRE(nq_spec_preset_temperature(0.0, &sp) == NQ_OK);
    double v = 0.0;
    REQUIRE(nq_spec_query(sp, 0.0, &v) == NQ_OK);
    CHECK(v == doctest::Approx(302.0));
    double nyq = 0.0;
    REQUIRE(nq_spec_true_nyquist(sp, -INFINITY, INFINITY, &nyq) == NQ_OK);
    CHECK(nyq == doctest::Approx(2.0 / 1800.0));
    const char* text = nq_spec_text(sp);
    REQUIRE(text != nullptr);
    CHECK(std::string(text).find("component") != std::string::npos);

    TempDir dir;
    const auto path = dir.file("spec.txt");
    REQUIRE(nq_spec_write(sp, path.c_str()) == NQ_OK);
    nq_signal_spec* back = nullptr;
    REQUIRE(nq_spec_load(path.c_str(), &back) == NQ_OK);
    CHECK(std::string(nq_spec_text(back)) == std::string(nq_spec_text(sp)));
    nq_spec_free(back);
    nq_spec_free(sp);
}

TEST_CASE("the sampler config initializer fills the documented defaults") {
    nq_sampler_config cfg;
    nq_sampler_config_init(&cfg);
    CHECK(cfg.window_seconds == 21600.0);
    CHECK(cfg.step_seconds == 300.0);
    CHECK(cfg.initial_rate == 1.0);
    CHECK(cfg.min_rate == 1e-4);
    CHECK(cfg.max_rate == 1e4);
    CHECK(cfg.probe_factor == 2.0);
    CHECK(cfg.headroom == 1.2);
    CHECK(cfg.decrease_patience == 3);
    CHECK(cfg.memory_depth == 8);
    CHECK(cfg.dual_ratio == 1.5);
    CHECK(cfg.alias_threshold == 0.1);
    CHECK(cfg.denoise_amplitude == 0.0);
    CHECK(cfg.energy_fraction == 0.99);
}

TEST_CASE("a simulation runs end to end and exports its artifacts") {
    TempDir dir;
    nq_signal_spec* spec = nullptr;
    REQUIRE(nq_spec_parse("component 0.05 1\n", &spec) == NQ_OK);
    nq_sampler_config cfg;
    nq_sampler_config_init(&cfg);
    cfg.window_seconds = 400.0;
    cfg.step_seconds = 400.0;
    cfg.initial_rate = 2.0;
    cfg.min_rate = 0.01;
    cfg.max_rate = 16.0;

    nq_simulation* sim = nullptr;
    REQUIRE(nq_simulate(spec, &cfg, 2000.0, &sim) == NQ_OK);
    REQUIRE(nq_simulation_window_count(sim) == 5);

    nq_window_record w = {};
    REQUIRE(nq_simulation_window(sim, 0, &w) == NQ_OK);
    CHECK(w.index == 0);
    CHECK(w.start_time == 0.0);
    CHECK(w.verdict == NQ_VERDICT_CLEAN);
    CHECK(w.mode_after == NQ_MODE_STEADY);
    CHECK(w.rate_before == 2.0);
    CHECK(w.estimate_hz == doctest::Approx(0.1));
    CHECK(nq_simulation_window(sim, 9, &w) == NQ_ERR_INVALID_ARGUMENT);

    CHECK(nq_simulation_final_rate(sim) == doctest::Approx(0.12));
    CHECK(nq_simulation_final_mode(sim) == NQ_MODE_STEADY);
    CHECK(nq_simulation_covered_seconds(sim) == 2000.0);
    REQUIRE(nq_simulation_window(sim, 4, &w) == NQ_OK);
    CHECK(nq_simulation_total_cost(sim) == w.total_samples);

    const auto log_path = dir.file("log.csv");
    const auto samples_path = dir.file("samples.csv");
    REQUIRE(nq_simulation_write_log_csv(sim, log_path.c_str()) == NQ_OK);
    REQUIRE(nq_simulation_write_samples_csv(sim, samples_path.c_str()) == NQ_OK);
    CHECK(slurp(log_path).rfind("window,start_time,", 0) == 0);
    CHECK(slurp(samples_path).find("timestamp,value") != std::string::npos);

    nq_simulation_free(sim);
    nq_spec_free(spec);
}

TEST_CASE("trace analysis fills the report struct") {
    nq_trace* t = make_tone_trace("cpu_usage", "host1", 0.25);
    nq_trace_report rep = {};
    REQUIRE(nq_analyze_trace(t, nullptr, &rep) == NQ_OK);
    CHECK(rep.aliased == 0);
    CHECK(rep.degenerate == 0);
    CHECK(rep.actual_rate_hz == doctest::Approx(1.0));
    CHECK(rep.nyquist_hz == 0.5);
    CHECK(rep.oversampling_ratio == 2.0);
    CHECK(rep.points_in_trace == 16);
    CHECK(rep.windows_total == 1);
    CHECK(rep.windows_aliased == 0);

    nq_report_options opt;
    nq_report_options_init(&opt);
    opt.rate_hint = 2.0;
    REQUIRE(nq_analyze_trace(t, &opt, &rep) == NQ_OK);
    CHECK(rep.actual_rate_hz == 2.0);

    TempDir dir;
    const auto path = dir.file("tone.csv");
    REQUIRE(nq_trace_write_csv(t, path.c_str()) == NQ_OK);
    REQUIRE(nq_analyze_file(path.c_str(), nullptr, &rep) == NQ_OK);
    CHECK(rep.oversampling_ratio == 2.0);
    nq_trace_free(t);
}

TEST_CASE("batch reporting through the boundary") {
    TempDir dir;
    const auto pa = dir.file("a.csv");
    const auto pb = dir.file("b.csv");
    const auto pbad = dir.file("broken.csv");
    {
        nq_trace* a = make_tone_trace("cpu_usage", "host1", 0.25);
        nq_trace* b = make_tone_trace("cpu_usage", "host2", 0.125);
        REQUIRE(nq_trace_write_csv(a, pa.c_str()) == NQ_OK);
        REQUIRE(nq_trace_write_csv(b, pb.c_str()) == NQ_OK);
        nq_trace_free(a);
        nq_trace_free(b);
        std::ofstream(pbad) << "definitely,not\na trace\n";
    }

    const char* paths[] = {pbad.c_str(), pb.c_str(), pa.c_str()};
    nq_report_set* set = nullptr;
    REQUIRE(nq_batch_report(paths, 3, nullptr, &set) == NQ_OK);
    REQUIRE(nq_report_count(set) == 2);
    CHECK(std::string(nq_report_entry_path(set, 0)) == pa);
    CHECK(std::string(nq_report_entry_path(set, 1)) == pb);
    CHECK(std::string(nq_report_entry_metric(set, 0)) == "cpu_usage");
    CHECK(std::string(nq_report_entry_device(set, 1)) == "host2");
    nq_trace_report rep = {};
    REQUIRE(nq_report_entry(set, 0, &rep) == NQ_OK);
    CHECK(rep.oversampling_ratio == 2.0);
    CHECK(nq_report_entry(set, 5, &rep) == NQ_ERR_INVALID_ARGUMENT);
    REQUIRE(nq_report_skipped_count(set) == 1);
    CHECK(std::string(nq_report_skipped_path(set, 0)) == pbad);
    CHECK(std::string(nq_report_skipped_reason(set, 0)).size() > 0);

    const auto pjson = dir.file("report.json");
    const auto pcdf = dir.file("cdf.csv");
    REQUIRE(nq_report_write_json(set, pjson.c_str()) == NQ_OK);
    REQUIRE(nq_report_write_cdf_csv(set, pcdf.c_str()) == NQ_OK);
    const auto json = slurp(pjson);
    CHECK(json.rfind("{", 0) == 0);
    CHECK(json.find("\"metrics\"") != std::string::npos);
    CHECK(slurp(pcdf).rfind("metric,oversampling_ratio,", 0) == 0);
    nq_report_free(set);

    const char* only_bad[] = {pbad.c_str()};
    CHECK(nq_batch_report(only_bad, 1, nullptr, &set) == NQ_ERR_ALL_TRACES_FAILED);
}

} // TEST_SUITE

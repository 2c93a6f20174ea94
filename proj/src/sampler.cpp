#include "sampler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "errors.hpp"
#include "io.hpp"

namespace nyqmon {

void validate(const SamplerConfig& cfg) {
    auto bad = [](const std::string& what) { fail(errc::config_violation, "sampler config: " + what); };
    auto pos = [&](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            bad(std::string(name) + " must be positive");
    };
    pos(cfg.window_seconds, "window_seconds");
    pos(cfg.step_seconds, "step_seconds");
    pos(cfg.initial_rate, "initial_rate");
    pos(cfg.min_rate, "min_rate");
    pos(cfg.max_rate, "max_rate");
    pos(cfg.alias_threshold, "alias_threshold");
    if (!(cfg.min_rate <= cfg.initial_rate && cfg.initial_rate <= cfg.max_rate))
        bad("rates must satisfy min <= initial <= max");
    if (!(cfg.probe_factor > 1.0) || !std::isfinite(cfg.probe_factor))
        bad("probe_factor must exceed 1");
    if (!(cfg.headroom >= 1.0) || !std::isfinite(cfg.headroom))
        bad("headroom must be >= 1");
    if (cfg.decrease_patience < 1)
        bad("decrease_patience must be >= 1");
    if (cfg.memory_depth < 1)
        bad("memory_depth must be >= 1");
    if (!(cfg.denoise_amplitude >= 0.0) || !std::isfinite(cfg.denoise_amplitude))
        bad("denoise_amplitude must be >= 0");
    if (!(cfg.energy_fraction > 0.0) || !(cfg.energy_fraction < 1.0))
        bad("energy_fraction must lie in (0, 1)");
    plan_dual_rates(1.0, cfg.dual_ratio); // rejects ratios <= 1 and integers
}

const char* to_string(SamplerMode m) {
    return m == SamplerMode::Probe ? "probe" : "steady";
}

const char* to_string(WindowVerdict v) {
    switch (v) {
    case WindowVerdict::Clean: return "clean";
    case WindowVerdict::Aliased: return "aliased";
    case WindowVerdict::Degenerate: return "degenerate";
    case WindowVerdict::Short: return "short";
    }
    return "?";
}

SamplerState make_state(const SamplerConfig& cfg) {
    validate(cfg);
    SamplerState st;
    st.mode = SamplerMode::Probe;
    st.current_rate = cfg.initial_rate;
    return st;
}

namespace {

void trim_front(std::deque<double>& dq, std::size_t depth) {
    while (dq.size() > depth)
        dq.pop_front();
}

} // namespace

WindowRecord step_window(SamplerState& st, const SamplerConfig& cfg,
                         const UniformSeries& fast, const UniformSeries& slow) {
    validate(cfg);
    if (!(st.current_rate > 0.0))
        fail(errc::config_violation, "sampler state has no current rate");
    const auto plan = plan_dual_rates(st.current_rate, cfg.dual_ratio);
    if (std::abs(slow.rate - plan.f2) > 1e-9 * plan.f2)
        fail(errc::rate_mismatch, "step: slow series rate does not match the current rate");
    if (std::abs(fast.rate - plan.f1) > 1e-9 * plan.f1)
        fail(errc::rate_mismatch, "step: fast series rate does not match ratio * current rate");

    WindowRecord rec;
    rec.rate_before = st.current_rate;

    // A window too short to transform cannot move the rate either way.
    if (slow.values.size() < 8 || fast.values.size() < 8) {
        rec.verdict = WindowVerdict::Short;
        rec.rate_after = st.current_rate;
        rec.mode_after = st.mode;
        return rec;
    }

    const auto dec = detect_aliasing(dft(fast), dft(slow), plan,
                                     {cfg.alias_threshold, cfg.denoise_amplitude});
    rec.discrepancy = dec.discrepancy;

    bool aliased = dec.aliased;
    bool degenerate = false;
    double est = 0.0;
    try {
        const auto ne = estimate_nyquist(fast, cfg.energy_fraction);
        if (ne.aliased)
            aliased = true; // spectrum still runs into the fold: not to be trusted
        else
            est = ne.rate_hz;
    } catch (const error& e) {
        if (e.code() != errc::degenerate_signal)
            throw;
        degenerate = true;
    }

    if (aliased) {
        rec.verdict = WindowVerdict::Aliased;
        double next = cfg.probe_factor * st.current_rate;
        // Seen this movie before: jump straight to the worst settled peak.
        if (!st.episode_peaks.empty())
            next = std::max(next, cfg.headroom * *std::max_element(st.episode_peaks.begin(),
                                                                   st.episode_peaks.end()));
        st.current_rate = std::min(cfg.max_rate, next);
        st.mode = SamplerMode::Probe;
        st.windows_below = 0;
    } else {
        rec.verdict = degenerate ? WindowVerdict::Degenerate : WindowVerdict::Clean;
        rec.estimate_hz = est; // 0 for a degenerate window
        if (st.mode == SamplerMode::Probe) {
            st.episode_peaks.push_back(st.current_rate);
            trim_front(st.episode_peaks, cfg.memory_depth);
            st.mode = SamplerMode::Steady;
        }
        st.remembered_max.push_back(est);
        trim_front(st.remembered_max, cfg.memory_depth);
        double target = cfg.headroom * *std::max_element(st.remembered_max.begin(),
                                                         st.remembered_max.end());
        target = std::clamp(target, cfg.min_rate, cfg.max_rate);
        if (target > st.current_rate * (1.0 + 1e-12)) {
            st.current_rate = target;
            st.windows_below = 0;
        } else if (target < st.current_rate * (1.0 - 1e-12)) {
            if (++st.windows_below >= cfg.decrease_patience) {
                st.current_rate = target;
                st.windows_below = 0;
            }
        } else {
            st.windows_below = 0;
        }
    }
    rec.rate_after = st.current_rate;
    rec.mode_after = st.mode;
    return rec;
}

SimulationResult run_simulation(const SignalSpec& spec, const SamplerConfig& cfg,
                                double horizon_seconds) {
    validate(cfg);
    validate(spec);
    const double W = cfg.window_seconds;
    if (!(horizon_seconds > 0.0) || horizon_seconds < W * (1.0 - 1e-9))
        fail(errc::horizon_too_short,
             "simulation horizon " + std::to_string(horizon_seconds) +
                 " s is shorter than one analysis window (" + std::to_string(W) + " s)");

    SimulationResult r;
    SamplerState st = make_state(cfg);
    double cover_end = 0.0;
    double due_slow = 0.0, due_fast = 0.0;

    for (std::size_t k = 0;; ++k) {
        const double start = static_cast<double>(k) * cfg.step_seconds;
        const double end = start + W;
        if (end > horizon_seconds * (1.0 + 1e-9))
            break;

        const auto plan = plan_dual_rates(st.current_rate, cfg.dual_ratio);
        const double tol = 0.25 / plan.f1; // grids closer than this count once

        // Collect the span this window adds on top of what previous windows
        // already paid for. Both streams run continuously at the current
        // rates; coincident instants are a single query.
        std::size_t added = 0;
        const double edge = end - 0.5 / plan.f1 * 1e-6;
        while (std::min(due_slow, due_fast) < edge) {
            double t;
            if (std::abs(due_slow - due_fast) <= tol) {
                t = std::min(due_slow, due_fast);
                due_slow += 1.0 / plan.f2;
                due_fast += 1.0 / plan.f1;
            } else if (due_slow < due_fast) {
                t = due_slow;
                due_slow += 1.0 / plan.f2;
            } else {
                t = due_fast;
                due_fast += 1.0 / plan.f1;
            }
            assert(r.samples.empty() || t > r.samples.back().timestamp);
            r.samples.push_back({t, query(spec, t)});
            ++added;
        }
        cover_end = end;

        // The decision looks at the whole window through both rate grids.
        const auto fast = generate(spec, plan.f1, W, start);
        const auto slow = generate(spec, plan.f2, W, start);
        auto rec = step_window(st, cfg, fast, slow);
        rec.index = k;
        rec.start_time = start;
        rec.new_samples = added;
        rec.total_samples = r.samples.size();
        r.windows.push_back(std::move(rec));
    }

    r.covered_seconds = cover_end;
    r.final_rate = st.current_rate;
    r.final_mode = st.mode;
    return r;
}

std::string format_log_csv(const SimulationResult& r) {
    std::string out = "window,start_time,mode,verdict,rate_before_hz,rate_after_hz,"
                      "estimate_hz,discrepancy,new_samples,total_samples\n";
    for (const auto& w : r.windows) {
        out += std::to_string(w.index);
        out += ',';
        append_double(out, w.start_time);
        out += ',';
        out += to_string(w.mode_after);
        out += ',';
        out += to_string(w.verdict);
        out += ',';
        append_double(out, w.rate_before);
        out += ',';
        append_double(out, w.rate_after);
        out += ',';
        append_double(out, w.estimate_hz);
        out += ',';
        append_double(out, w.discrepancy);
        out += ',';
        out += std::to_string(w.new_samples);
        out += ',';
        out += std::to_string(w.total_samples);
        out += '\n';
    }
    return out;
}

} // namespace nyqmon

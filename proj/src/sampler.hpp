#pragma once

#include <deque>
#include <string>
#include <vector>

#include "alias.hpp"
#include "series.hpp"
#include "synth.hpp"

namespace nyqmon {

struct SamplerConfig {
    double window_seconds = 21600.0; // analysis span per decision
    double step_seconds = 300.0;     // decision cadence
    double initial_rate = 1.0;       // Hz
    double min_rate = 1e-4;
    double max_rate = 1e4;
    double probe_factor = 2.0;     // rate multiplier while still aliased
    double headroom = 1.2;         // safety margin over the estimate
    int decrease_patience = 3;     // clean low windows before stepping down
    std::size_t memory_depth = 8;  // remembered estimates / episode peaks
    double dual_ratio = 1.5;       // fast stream rate = ratio * current
    double alias_threshold = 0.1;
    double denoise_amplitude = 0.0;
    double energy_fraction = kDefaultEnergyFraction;
};

void validate(const SamplerConfig& cfg);

enum class SamplerMode { Probe, Steady };
enum class WindowVerdict { Clean, Aliased, Degenerate, Short };

const char* to_string(SamplerMode m);
const char* to_string(WindowVerdict v);

struct SamplerState {
    SamplerMode mode = SamplerMode::Probe;
    double current_rate = 0.0;
    // Recent clean-window estimates: the decrease target never drops below
    // headroom * max of these, so one quiet window cannot erase history.
    std::deque<double> remembered_max;
    // Rates that past probe episodes settled at. A fresh alias verdict jumps
    // straight back to the worst known peak instead of doubling up slowly.
    std::deque<double> episode_peaks;
    int windows_below = 0; // consecutive clean windows wanting a decrease
};

SamplerState make_state(const SamplerConfig& cfg);

struct WindowRecord {
    std::size_t index = 0;
    double start_time = 0.0;
    WindowVerdict verdict = WindowVerdict::Short;
    SamplerMode mode_after = SamplerMode::Probe;
    double rate_before = 0.0;
    double rate_after = 0.0;
    double estimate_hz = -1.0; // -1 when no usable estimate (aliased/short)
    double discrepancy = 0.0;
    std::size_t new_samples = 0;
    std::size_t total_samples = 0;
};

// One decision from a pair of concurrent observations of the same window:
// `fast` at dual_ratio * state.current_rate, `slow` at state.current_rate.
// Mutates the state (mode, rate, memories) and reports what happened.
WindowRecord step_window(SamplerState& st, const SamplerConfig& cfg,
                         const UniformSeries& fast, const UniformSeries& slow);

struct SimulationResult {
    std::vector<WindowRecord> windows;
    std::vector<TimePoint> samples; // the merged stream actually collected
    double covered_seconds = 0.0;   // [0, end of the last analyzed window)
    double final_rate = 0.0;
    SamplerMode final_mode = SamplerMode::Probe;
    std::size_t total_cost() const { return samples.size(); }
};

// Drives the sampler over a synthetic scenario for `horizon` seconds.
// Windows advance by step_seconds; the cost stream is the deduplicated
// union of both rate grids over each newly covered span.
SimulationResult run_simulation(const SignalSpec& spec, const SamplerConfig& cfg,
                                double horizon_seconds);

// Per-window decision log: one CSV row per window.
std::string format_log_csv(const SimulationResult& r);

} // namespace nyqmon

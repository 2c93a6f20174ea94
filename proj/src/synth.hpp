#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "series.hpp"

namespace nyqmon {

struct SignalComponent {
    double frequency = 0.0; // Hz, >= 0
    double amplitude = 0.0;
    double phase = 0.0; // radians
};

// From `time` onward the component set is replaced wholesale.
struct ChangeEvent {
    double time = 0.0;
    std::vector<SignalComponent> components;
};

// Closed-form scenario: offset + trend*t + active sinusoids + seeded noise.
// query() is a pure function of (spec, t), so any two samplers observing the
// same spec at the same instants see identical values.
struct SignalSpec {
    std::vector<SignalComponent> components;
    double offset = 0.0;
    double trend = 0.0;            // per second
    double noise_amplitude = 0.0;  // uniform in [-a, a]
    std::vector<ChangeEvent> change_events; // ascending by time
    std::uint64_t seed = 0;
};

void validate(const SignalSpec& spec);

double query(const SignalSpec& spec, double t);

// round(duration * rate) samples starting at start_time; a duration shorter
// than one interval still yields the single sample at start_time.
UniformSeries generate(const SignalSpec& spec, double rate, double duration,
                       double start_time = 0.0);

// Twice the highest component frequency active anywhere in [t0, t1).
// A DC-only spec needs no sampling at all: 0.
double true_nyquist(const SignalSpec& spec, double t0, double t1);
double true_nyquist(const SignalSpec& spec);

// Flat key-value scenario files; see README for the grammar.
SignalSpec parse_signal_spec(const std::string& text);
SignalSpec load_signal_spec(const std::string& path);
std::string serialize_signal_spec(const SignalSpec& spec);

// Slow diurnal-style drift riding on a large DC level, the shape of a
// temperature channel: components at 1/3600 and 1/1800 Hz.
SignalSpec temperature_like_preset(double noise_amplitude = 0.0);

} // namespace nyqmon

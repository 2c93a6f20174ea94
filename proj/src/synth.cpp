#include "synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "errors.hpp"

namespace nyqmon {
namespace {

void validate_components(const std::vector<SignalComponent>& comps, const char* where) {
    for (const auto& c : comps) {
        if (!(c.frequency >= 0.0) || !std::isfinite(c.frequency))
            fail(errc::invalid_argument, std::string(where) + ": component frequency must be >= 0");
        if (!std::isfinite(c.amplitude) || !std::isfinite(c.phase))
            fail(errc::invalid_argument, std::string(where) + ": component amplitude/phase must be finite");
    }
}

// splitmix64 of (seed, bits of t): noise is a pure function of the query
// instant, not of query order.
double noise_at(std::uint64_t seed, double amplitude, double t) {
    std::uint64_t z = seed ^ std::bit_cast<std::uint64_t>(t);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    const double u = static_cast<double>(z >> 11) * 0x1.0p-53; // [0, 1)
    return amplitude * (2.0 * u - 1.0);
}

const std::vector<SignalComponent>& active_components(const SignalSpec& spec, double t) {
    const std::vector<SignalComponent>* act = &spec.components;
    for (const auto& ev : spec.change_events) {
        if (ev.time <= t)
            act = &ev.components;
        else
            break;
    }
    return *act;
}

} // namespace

void validate(const SignalSpec& spec) {
    if (!std::isfinite(spec.offset) || !std::isfinite(spec.trend))
        fail(errc::invalid_argument, "signal spec: offset/trend must be finite");
    if (!(spec.noise_amplitude >= 0.0) || !std::isfinite(spec.noise_amplitude))
        fail(errc::invalid_argument, "signal spec: noise amplitude must be >= 0");
    validate_components(spec.components, "signal spec");
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& ev : spec.change_events) {
        if (!std::isfinite(ev.time) || ev.time < prev)
            fail(errc::invalid_argument, "signal spec: change events must be sorted ascending");
        prev = ev.time;
        validate_components(ev.components, "signal spec change event");
    }
}

double query(const SignalSpec& spec, double t) {
    double v = spec.offset + spec.trend * t;
    for (const auto& c : active_components(spec, t))
        v += c.amplitude *
             std::sin(2.0 * std::numbers::pi * c.frequency * t + c.phase);
    if (spec.noise_amplitude > 0.0)
        v += noise_at(spec.seed, spec.noise_amplitude, t);
    return v;
}

UniformSeries generate(const SignalSpec& spec, double rate, double duration,
                       double start_time) {
    validate(spec);
    if (!(rate > 0.0) || !std::isfinite(rate))
        fail(errc::invalid_rate, "generate: rate must be positive");
    if (!(duration > 0.0) || !std::isfinite(duration))
        fail(errc::invalid_argument, "generate: duration must be positive");

    const auto n = std::max<long long>(1, std::llround(duration * rate));
    UniformSeries us;
    us.metric_name = "synthetic";
    us.start_time = start_time;
    us.rate = rate;
    us.values.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < us.values.size(); ++i)
        us.values[i] = query(spec, us.instant(i));
    return us;
}

double true_nyquist(const SignalSpec& spec, double t0, double t1) {
    validate(spec);
    double fmax = 0.0;
    auto scan = [&](const std::vector<SignalComponent>& comps) {
        for (const auto& c : comps)
            if (c.amplitude != 0.0)
                fmax = std::max(fmax, c.frequency);
    };
    // Base set is active on [-inf, first event); each event from its time on.
    double base_end = spec.change_events.empty()
                          ? std::numeric_limits<double>::infinity()
                          : spec.change_events.front().time;
    if (t0 < base_end)
        scan(spec.components);
    for (std::size_t i = 0; i < spec.change_events.size(); ++i) {
        const double seg_start = spec.change_events[i].time;
        const double seg_end = i + 1 < spec.change_events.size()
                                   ? spec.change_events[i + 1].time
                                   : std::numeric_limits<double>::infinity();
        if (seg_start < t1 && t0 < seg_end)
            scan(spec.change_events[i].components);
    }
    return 2.0 * fmax;
}

double true_nyquist(const SignalSpec& spec) {
    return true_nyquist(spec, -std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
}

SignalSpec parse_signal_spec(const std::string& text) {
    SignalSpec spec;
    std::vector<SignalComponent>* target = &spec.components;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key))
            continue;
        auto want = [&](double& out) {
            if (!(ls >> out) || !std::isfinite(out))
                fail(errc::parse_error,
                     "signal spec line " + std::to_string(lineno) + ": bad number for '" + key + "'");
        };
        if (key == "offset") {
            want(spec.offset);
        } else if (key == "trend") {
            want(spec.trend);
        } else if (key == "noise") {
            want(spec.noise_amplitude);
        } else if (key == "seed") {
            unsigned long long s = 0;
            if (!(ls >> s))
                fail(errc::parse_error, "signal spec line " + std::to_string(lineno) + ": bad seed");
            spec.seed = s;
        } else if (key == "component") {
            SignalComponent c;
            want(c.frequency);
            want(c.amplitude);
            double ph = 0.0;
            if (ls >> ph) {
                if (!std::isfinite(ph))
                    fail(errc::parse_error,
                         "signal spec line " + std::to_string(lineno) + ": bad phase");
                c.phase = ph;
            } else if (!ls.eof()) {
                fail(errc::parse_error,
                     "signal spec line " + std::to_string(lineno) + ": bad phase");
            }
            target->push_back(c);
        } else if (key == "change") {
            ChangeEvent ev;
            want(ev.time);
            spec.change_events.push_back(ev);
            target = &spec.change_events.back().components;
        } else {
            fail(errc::parse_error,
                 "signal spec line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        std::string rest;
        if (ls >> rest)
            fail(errc::parse_error,
                 "signal spec line " + std::to_string(lineno) + ": trailing '" + rest + "'");
    }
    validate(spec);
    return spec;
}

SignalSpec load_signal_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(errc::io_error, "cannot open signal spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_signal_spec(buf.str());
}

std::string serialize_signal_spec(const SignalSpec& spec) {
    std::ostringstream os;
    os.precision(17);
    os << "offset " << spec.offset << "\n";
    os << "trend " << spec.trend << "\n";
    os << "noise " << spec.noise_amplitude << "\n";
    os << "seed " << spec.seed << "\n";
    auto emit = [&](const std::vector<SignalComponent>& comps) {
        for (const auto& c : comps)
            os << "component " << c.frequency << " " << c.amplitude << " " << c.phase << "\n";
    };
    emit(spec.components);
    for (const auto& ev : spec.change_events) {
        os << "change " << ev.time << "\n";
        emit(ev.components);
    }
    return os.str();
}

SignalSpec temperature_like_preset(double noise_amplitude) {
    SignalSpec spec;
    spec.offset = 300.0;
    spec.components = {
        {1.0 / 3600.0, 4.0, 0.0},
        {1.0 / 1800.0, 2.0, std::numbers::pi / 2.0},
    };
    spec.noise_amplitude = noise_amplitude;
    spec.seed = 20260822;
    return spec;
}

} // namespace nyqmon

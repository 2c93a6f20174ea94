#include "series.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "errors.hpp"

namespace nyqmon {

void validate(const TimeSeries& ts) {
    for (std::size_t i = 0; i < ts.points.size(); ++i) {
        const auto& p = ts.points[i];
        if (!std::isfinite(p.timestamp) || !std::isfinite(p.value))
            fail(errc::invalid_argument, "non-finite timestamp or value at point " + std::to_string(i));
        if (i > 0 && !(p.timestamp > ts.points[i - 1].timestamp))
            fail(errc::non_monotone_timestamps,
                 "timestamps must strictly increase (point " + std::to_string(i) + ")");
    }
}

void validate(const UniformSeries& us) {
    if (!(us.rate > 0.0) || !std::isfinite(us.rate))
        fail(errc::invalid_rate, "sampling rate must be positive and finite");
    if (!std::isfinite(us.start_time))
        fail(errc::invalid_argument, "start_time must be finite");
    for (std::size_t i = 0; i < us.values.size(); ++i)
        if (!std::isfinite(us.values[i]))
            fail(errc::invalid_argument, "non-finite value at sample " + std::to_string(i));
}

void validate(const QuantizationSpec& qs) {
    if (!(qs.quantum > 0.0) || !std::isfinite(qs.quantum))
        fail(errc::invalid_argument, "quantum must be positive and finite");
    if (!std::isfinite(qs.origin))
        fail(errc::invalid_argument, "quantization origin must be finite");
}

UniformSeries regularize(const TimeSeries& ts, double rate, double max_gap_multiple) {
    validate(ts);
    if (!(rate > 0.0) || !std::isfinite(rate))
        fail(errc::invalid_rate, "regularize: rate must be positive");
    if (!(max_gap_multiple > 0.0))
        fail(errc::invalid_argument, "regularize: max_gap_multiple must be positive");
    if (ts.points.size() < 2)
        fail(errc::empty_trace, "regularize: need at least 2 points, got " +
                                    std::to_string(ts.points.size()));

    const double max_gap = max_gap_multiple / rate;
    for (std::size_t i = 1; i < ts.points.size(); ++i) {
        const double gap = ts.points[i].timestamp - ts.points[i - 1].timestamp;
        if (gap > max_gap) {
            std::ostringstream os;
            os << "regularize: gap of " << gap << "s before t=" << ts.points[i].timestamp
               << " exceeds " << max_gap_multiple << "x the output interval";
            fail(errc::gap_too_large, os.str());
        }
    }

    const double first = ts.points.front().timestamp;
    const double last = ts.points.back().timestamp;
    // Tiny slack so an exact span*rate integer does not round down a sample.
    const auto count = static_cast<std::size_t>(std::floor((last - first) * rate + 1e-9)) + 1;

    UniformSeries out;
    out.metric_name = ts.metric_name;
    out.device_id = ts.device_id;
    out.unit = ts.unit;
    out.start_time = first;
    out.rate = rate;
    out.values.resize(count);

    std::size_t j = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const double t = first + static_cast<double>(i) / rate;
        // Advance only while the next point is strictly closer: equidistant
        // candidates keep the earlier point.
        while (j + 1 < ts.points.size() &&
               std::abs(ts.points[j + 1].timestamp - t) < std::abs(ts.points[j].timestamp - t))
            ++j;
        out.values[i] = ts.points[j].value;
    }
    return out;
}

UniformSeries decimate(const UniformSeries& us, double target_rate) {
    validate(us);
    if (!(target_rate > 0.0) || !std::isfinite(target_rate) || target_rate > us.rate)
        fail(errc::invalid_rate, "decimate: target rate must be in (0, rate]");

    const auto n = us.values.size();
    UniformSeries out;
    out.metric_name = us.metric_name;
    out.device_id = us.device_id;
    out.unit = us.unit;
    out.start_time = us.start_time;
    out.rate = target_rate;
    if (n == 0)
        return out;

    const auto m = static_cast<std::size_t>(
        std::llround(static_cast<double>(n) * target_rate / us.rate));
    out.values.resize(std::max<std::size_t>(m, 1));
    const double step = us.rate / target_rate; // input samples per output sample
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        auto idx = static_cast<long long>(std::llround(static_cast<double>(i) * step));
        if (idx < 0)
            idx = 0;
        if (idx >= static_cast<long long>(n))
            idx = static_cast<long long>(n) - 1;
        out.values[i] = us.values[static_cast<std::size_t>(idx)];
    }
    return out;
}

double quantize_value(double v, const QuantizationSpec& qs) {
    return qs.origin + qs.quantum * std::round((v - qs.origin) / qs.quantum);
}

UniformSeries quantize(const UniformSeries& us, const QuantizationSpec& qs) {
    validate(us);
    validate(qs);
    UniformSeries out = us;
    for (auto& v : out.values)
        v = quantize_value(v, qs);
    return out;
}

double l2_distance(const UniformSeries& a, const UniformSeries& b) {
    validate(a);
    validate(b);
    const double rtol = 1e-9 * std::max(a.rate, b.rate);
    if (std::abs(a.rate - b.rate) > rtol)
        fail(errc::shape_mismatch, "l2_distance: sampling rates differ");
    if (a.values.size() != b.values.size())
        fail(errc::shape_mismatch, "l2_distance: lengths differ (" + std::to_string(a.values.size()) +
                                       " vs " + std::to_string(b.values.size()) + ")");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

} // namespace nyqmon

#pragma once

#include <string>
#include <vector>

namespace nyqmon {

struct TimePoint {
    double timestamp = 0.0; // seconds
    double value = 0.0;
};

// Irregular trace as it comes off a collector. Timestamps strictly increase.
struct TimeSeries {
    std::string metric_name;
    std::string device_id;
    std::string unit;
    std::vector<TimePoint> points;
};

// Evenly spaced samples: values[i] sits at start_time + i / rate.
struct UniformSeries {
    std::string metric_name;
    std::string device_id;
    std::string unit;
    double start_time = 0.0;
    double rate = 0.0; // Hz, > 0
    std::vector<double> values;

    double instant(std::size_t i) const { return start_time + static_cast<double>(i) / rate; }
    std::size_t size() const { return values.size(); }
    // Time covered by the sample grid, first to last instant.
    double span() const { return values.empty() ? 0.0 : static_cast<double>(values.size() - 1) / rate; }
};

struct QuantizationSpec {
    double quantum = 0.0; // > 0
    double origin = 0.0;
};

void validate(const TimeSeries& ts);
void validate(const UniformSeries& us);
void validate(const QuantizationSpec& qs);

inline constexpr double kDefaultMaxGapMultiple = 10.0;

// Nearest-neighbor resampling of an irregular trace onto a uniform grid
// anchored at the first timestamp. Equidistant candidates resolve to the
// earlier point. Gaps wider than max_gap_multiple output intervals refuse
// rather than invent data.
UniformSeries regularize(const TimeSeries& ts, double rate,
                         double max_gap_multiple = kDefaultMaxGapMultiple);

// Keep the sample nearest each slower-grid instant; no anti-alias filtering,
// deliberately modeling a poller that simply runs slower.
UniformSeries decimate(const UniformSeries& us, double target_rate);

// Snap every value to origin + k * quantum, halves rounding away from zero.
UniformSeries quantize(const UniformSeries& us, const QuantizationSpec& qs);
double quantize_value(double v, const QuantizationSpec& qs);

// Plain Euclidean distance between aligned series (same rate, same length).
double l2_distance(const UniformSeries& a, const UniformSeries& b);

} // namespace nyqmon

#pragma once

#include <string>
#include <vector>

#include "series.hpp"
#include "spectral.hpp"

namespace nyqmon {

struct ReportOptions {
    double energy_fraction = kDefaultEnergyFraction;
    double max_gap_multiple = kDefaultMaxGapMultiple;
    // 0 means derive the grid rate from the median timestamp gap.
    double rate_hint = 0.0;
    // 0 analyzes the whole trace at once; otherwise non-overlapping windows
    // of this many seconds, and the headline is the worst (largest) window.
    double window_seconds = 0.0;
};

struct TraceReport {
    std::string path;
    std::string metric_name;
    std::string device_id;
    std::string unit;
    std::size_t points_in_trace = 0;
    std::size_t samples_analyzed = 0;
    double actual_rate_hz = 0.0; // grid rate the trace was regularized to
    bool aliased = false;        // every analyzed window ran into the fold
    bool degenerate = false;     // no structure beyond a constant level
    double nyquist_hz = 0.0;     // worst-window requirement; 0 if degenerate
    // actual_rate / nyquist when both are meaningful, else -1.
    double oversampling_ratio = -1.0;
    std::size_t windows_total = 0;
    std::size_t windows_aliased = 0;
};

TraceReport analyze_series(const TimeSeries& ts, const ReportOptions& opt = {});
TraceReport analyze_trace_file(const std::string& path, const ReportOptions& opt = {});

struct SkippedTrace {
    std::string path;
    std::string reason;
};

// Five-number summary of the clean oversampling ratios for one metric.
struct RatioSummary {
    std::string metric_name;
    std::size_t count = 0;
    double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
};

struct ReportSet {
    std::vector<TraceReport> reports; // sorted by path
    std::vector<SkippedTrace> skipped;
    std::vector<RatioSummary> summaries; // sorted by metric name
};

// Analyzes every path; unreadable or unusable traces are recorded, not
// fatal. Only a fully empty yield is an error.
ReportSet batch_report(const std::vector<std::string>& paths,
                       const ReportOptions& opt = {});

std::string format_report_json(const ReportSet& set);

// Long-form CSV of the per-metric ratio distribution:
// metric,oversampling_ratio,cumulative_fraction (ratios ascending per metric).
std::string format_ratio_cdf_csv(const ReportSet& set);

} // namespace nyqmon

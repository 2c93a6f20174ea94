#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "json.hpp"

#include "errors.hpp"
#include "io.hpp"

namespace nyqmon {
namespace {

double median_gap(const TimeSeries& ts) {
    std::vector<double> gaps;
    gaps.reserve(ts.points.size() - 1);
    for (std::size_t i = 1; i < ts.points.size(); ++i)
        gaps.push_back(ts.points[i].timestamp - ts.points[i - 1].timestamp);
    std::sort(gaps.begin(), gaps.end());
    const std::size_t m = gaps.size();
    return m % 2 ? gaps[m / 2] : 0.5 * (gaps[m / 2 - 1] + gaps[m / 2]);
}

// Linear-interpolation quantile of an ascending vector.
double quantile(const std::vector<double>& v, double p) {
    const double pos = p * static_cast<double>(v.size() - 1);
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= v.size())
        return v.back();
    const double frac = pos - static_cast<double>(i);
    return v[i] * (1.0 - frac) + v[i + 1] * frac;
}

} // namespace

TraceReport analyze_series(const TimeSeries& ts, const ReportOptions& opt) {
    if (!(opt.energy_fraction > 0.0) || !(opt.energy_fraction < 1.0))
        fail(errc::invalid_argument, "analyze: energy fraction must lie in (0, 1)");
    if (ts.points.size() < 2)
        fail(errc::empty_trace, "analyze: need at least two points");

    TraceReport rep;
    rep.metric_name = ts.metric_name;
    rep.device_id = ts.device_id;
    rep.unit = ts.unit;
    rep.points_in_trace = ts.points.size();

    double rate = opt.rate_hint;
    if (rate <= 0.0) {
        const double gap = median_gap(ts);
        if (!(gap > 0.0))
            fail(errc::invalid_rate, "analyze: cannot derive a rate from the timestamps");
        rate = 1.0 / gap;
    }
    const auto us = regularize(ts, rate, opt.max_gap_multiple);
    rep.actual_rate_hz = rate;
    rep.samples_analyzed = us.values.size();

    // Cut into non-overlapping windows; fewer than one full window (or
    // windowing disabled) means the whole series is the single window.
    std::size_t wlen = us.values.size();
    if (opt.window_seconds > 0.0) {
        const auto n = static_cast<std::size_t>(std::llround(opt.window_seconds * rate));
        if (n >= 8 && n < us.values.size())
            wlen = n;
    }

    double worst = 0.0;
    bool any_clean = false;
    for (std::size_t off = 0; off + wlen <= us.values.size(); off += wlen) {
        UniformSeries w;
        w.rate = us.rate;
        w.start_time = us.instant(off);
        w.values.assign(us.values.begin() + static_cast<std::ptrdiff_t>(off),
                        us.values.begin() + static_cast<std::ptrdiff_t>(off + wlen));
        ++rep.windows_total;
        try {
            const auto est = estimate_nyquist(w, opt.energy_fraction);
            if (est.aliased) {
                ++rep.windows_aliased;
            } else {
                any_clean = true;
                worst = std::max(worst, est.rate_hz);
            }
        } catch (const error& e) {
            if (e.code() != errc::degenerate_signal)
                throw;
            // A flat stretch needs nothing; it cannot raise the headline.
        }
    }
    if (rep.windows_total == 0)
        fail(errc::too_short, "analyze: trace shorter than one analysis window");

    if (any_clean) {
        rep.nyquist_hz = worst;
        rep.oversampling_ratio = worst > 0.0 ? rate / worst : -1.0;
    } else if (rep.windows_aliased == rep.windows_total) {
        rep.aliased = true;
        rep.nyquist_hz = -1.0;
    } else if (rep.windows_aliased > 0) {
        // Aliased where there was structure at all: still aliased.
        rep.aliased = true;
        rep.nyquist_hz = -1.0;
    } else {
        rep.degenerate = true;
        rep.nyquist_hz = 0.0;
    }
    return rep;
}

TraceReport analyze_trace_file(const std::string& path, const ReportOptions& opt) {
    auto rep = analyze_series(load_trace_csv(path), opt);
    rep.path = path;
    return rep;
}

ReportSet batch_report(const std::vector<std::string>& paths, const ReportOptions& opt) {
    if (paths.empty())
        fail(errc::invalid_argument, "batch: no input paths");
    std::vector<std::string> sorted = paths;
    std::sort(sorted.begin(), sorted.end());

    ReportSet set;
    for (const auto& p : sorted) {
        try {
            set.reports.push_back(analyze_trace_file(p, opt));
        } catch (const error& e) {
            set.skipped.push_back({p, e.what()});
        }
    }
    if (set.reports.empty())
        fail(errc::all_traces_failed, "batch: none of the " +
                                          std::to_string(paths.size()) +
                                          " traces could be analyzed");

    std::map<std::string, std::vector<double>> by_metric;
    for (const auto& r : set.reports)
        if (!r.aliased && !r.degenerate && r.oversampling_ratio > 0.0)
            by_metric[r.metric_name].push_back(r.oversampling_ratio);
    for (auto& [name, ratios] : by_metric) {
        std::sort(ratios.begin(), ratios.end());
        RatioSummary s;
        s.metric_name = name;
        s.count = ratios.size();
        s.min = ratios.front();
        s.q1 = quantile(ratios, 0.25);
        s.median = quantile(ratios, 0.5);
        s.q3 = quantile(ratios, 0.75);
        s.max = ratios.back();
        set.summaries.push_back(std::move(s));
    }
    return set;
}

std::string format_report_json(const ReportSet& set) {
    nlohmann::json j;
    j["traces"] = nlohmann::json::array();
    for (const auto& r : set.reports) {
        nlohmann::json t;
        t["path"] = r.path;
        t["metric"] = r.metric_name;
        t["device"] = r.device_id;
        if (!r.unit.empty())
            t["unit"] = r.unit;
        t["points_in_trace"] = r.points_in_trace;
        t["samples_analyzed"] = r.samples_analyzed;
        t["actual_rate_hz"] = r.actual_rate_hz;
        t["aliased"] = r.aliased;
        t["degenerate"] = r.degenerate;
        t["nyquist_hz"] = r.nyquist_hz;
        t["oversampling_ratio"] = r.oversampling_ratio;
        t["windows_total"] = r.windows_total;
        t["windows_aliased"] = r.windows_aliased;
        j["traces"].push_back(std::move(t));
    }
    j["skipped"] = nlohmann::json::array();
    for (const auto& s : set.skipped)
        j["skipped"].push_back({{"path", s.path}, {"reason", s.reason}});
    j["metrics"] = nlohmann::json::object();
    for (const auto& s : set.summaries)
        j["metrics"][s.metric_name] = {{"count", s.count}, {"min", s.min},
                                       {"q1", s.q1},       {"median", s.median},
                                       {"q3", s.q3},       {"max", s.max}};
    return j.dump(2) + "\n";
}

std::string format_ratio_cdf_csv(const ReportSet& set) {
    std::map<std::string, std::vector<double>> by_metric;
    for (const auto& r : set.reports)
        if (!r.aliased && !r.degenerate && r.oversampling_ratio > 0.0)
            by_metric[r.metric_name].push_back(r.oversampling_ratio);

    std::string out = "metric,oversampling_ratio,cumulative_fraction\n";
    for (auto& [name, ratios] : by_metric) {
        std::sort(ratios.begin(), ratios.end());
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            out += name;
            out += ',';
            append_double(out, ratios[i]);
            out += ',';
            append_double(out, static_cast<double>(i + 1) / static_cast<double>(ratios.size()));
            out += '\n';
        }
    }
    return out;
}

} // namespace nyqmon

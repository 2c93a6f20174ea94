#include "io.hpp"

#include <cassert>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "errors.hpp"

namespace nyqmon {
namespace {

std::string trim(std::string_view sv) {
    const char* ws = " \t\r\n";
    const auto b = sv.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = sv.find_last_not_of(ws);
    return std::string(sv.substr(b, e - b + 1));
}

double parse_double(const std::string& tok, const std::string& path, int lineno) {
    double out = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        fail(errc::parse_error,
             path + ":" + std::to_string(lineno) + ": not a number: '" + tok + "'");
    return out;
}

// "cpu_load__router7" -> {"cpu_load", "router7"}
void stem_metric_device(const std::string& path, std::string& metric, std::string& device) {
    const std::string stem = std::filesystem::path(path).stem().string();
    const auto sep = stem.find("__");
    if (sep == std::string::npos) {
        if (metric.empty())
            metric = stem;
        return;
    }
    if (metric.empty())
        metric = stem.substr(0, sep);
    if (device.empty())
        device = stem.substr(sep + 2);
}

} // namespace

void append_double(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    assert(res.ec == std::errc());
    out.append(buf, res.ptr);
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.parent_path().empty() ? "." : target.parent_path();
    const fs::path tmp = dir / (target.filename().string() + ".tmp." +
                                std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(errc::io_error, "cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            fail(errc::io_error, "write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        fail(errc::io_error, "rename to " + path + " failed: " + ec.message());
    }
}

TimeSeries load_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(errc::io_error, "cannot open: " + path);

    TimeSeries ts;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty())
            continue;
        if (s[0] == '#') {
            const std::string body = trim(s.substr(1));
            for (const char* key : {"metric:", "device:", "unit:"}) {
                if (body.rfind(key, 0) == 0) {
                    const std::string val = trim(body.substr(std::strlen(key)));
                    if (key[0] == 'm')
                        ts.metric_name = val;
                    else if (key[0] == 'd')
                        ts.device_id = val;
                    else
                        ts.unit = val;
                }
            }
            continue;
        }
        const auto comma = s.find(',');
        if (comma == std::string::npos)
            fail(errc::parse_error,
                 path + ":" + std::to_string(lineno) + ": expected 'timestamp,value'");
        const std::string a = trim(s.substr(0, comma));
        const std::string b = trim(s.substr(comma + 1));
        if (!saw_header && ts.points.empty() && a == "timestamp" && b == "value") {
            saw_header = true;
            continue;
        }
        TimePoint p;
        p.timestamp = parse_double(a, path, lineno);
        p.value = parse_double(b, path, lineno);
        ts.points.push_back(p);
    }
    if (ts.points.empty())
        fail(errc::empty_file, "no data rows in " + path);

    stem_metric_device(path, ts.metric_name, ts.device_id);
    validate(ts); // monotone timestamps, finite values
    return ts;
}

namespace {

void append_annotations(std::string& out, const std::string& metric,
                        const std::string& device, const std::string& unit) {
    if (!metric.empty())
        out += "# metric: " + metric + "\n";
    if (!device.empty())
        out += "# device: " + device + "\n";
    if (!unit.empty())
        out += "# unit: " + unit + "\n";
}

} // namespace

std::string format_trace_csv(const TimeSeries& ts) {
    std::string out;
    append_annotations(out, ts.metric_name, ts.device_id, ts.unit);
    out += "timestamp,value\n";
    for (const auto& p : ts.points) {
        append_double(out, p.timestamp);
        out += ',';
        append_double(out, p.value);
        out += '\n';
    }
    return out;
}

std::string format_uniform_csv(const UniformSeries& us) {
    std::string out;
    append_annotations(out, us.metric_name, us.device_id, us.unit);
    out += "# rate_hz: ";
    append_double(out, us.rate);
    out += '\n';
    out += "timestamp,value\n";
    for (std::size_t i = 0; i < us.values.size(); ++i) {
        append_double(out, us.instant(i));
        out += ',';
        append_double(out, us.values[i]);
        out += '\n';
    }
    return out;
}

std::string format_spectrum_csv(const Spectrum& s) {
    std::string out = "frequency_hz,psd\n";
    const std::size_t n = s.psd.size();
    for (std::size_t j = 0; n != 0 && j <= n / 2; ++j) {
        append_double(out, s.frequency(j));
        out += ',';
        append_double(out, s.psd[j]);
        out += '\n';
    }
    return out;
}

void write_trace_csv(const std::string& path, const TimeSeries& ts) {
    atomic_write(path, format_trace_csv(ts));
}

void write_uniform_csv(const std::string& path, const UniformSeries& us) {
    atomic_write(path, format_uniform_csv(us));
}

void write_spectrum_csv(const std::string& path, const Spectrum& s) {
    atomic_write(path, format_spectrum_csv(s));
}

} // namespace nyqmon

#pragma once

#include <string>

#include "series.hpp"
#include "spectral.hpp"

namespace nyqmon {

// Write-temp-then-rename in the target directory; readers never observe a
// partially written file.
void atomic_write(const std::string& path, const std::string& content);

// Appends the shortest decimal form that parses back to the same double.
void append_double(std::string& out, double v);

// Trace files are CSV with a `timestamp,value` header. `#` lines are
// comments; `# metric: X`, `# device: Y` and `# unit: Z` are recognized
// annotations. Missing metric/device fall back to the file stem, split on
// "__" (e.g. cpu_load__router7.csv).
TimeSeries load_trace_csv(const std::string& path);

std::string format_trace_csv(const TimeSeries& ts);
std::string format_uniform_csv(const UniformSeries& us);

// One-sided magnitude view, bins 0..floor(N/2): `frequency_hz,psd`.
std::string format_spectrum_csv(const Spectrum& s);

void write_trace_csv(const std::string& path, const TimeSeries& ts);
void write_uniform_csv(const std::string& path, const UniformSeries& us);
void write_spectrum_csv(const std::string& path, const Spectrum& s);

} // namespace nyqmon

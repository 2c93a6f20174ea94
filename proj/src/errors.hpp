#pragma once

#include <stdexcept>
#include <string>

namespace nyqmon {

enum class errc {
    invalid_argument,
    empty_trace,
    gap_too_large,
    invalid_rate,
    shape_mismatch,
    empty_series,
    missing_coefficients,
    too_short,
    degenerate_signal,
    invalid_cutoff,
    invalid_target_rate,
    integer_ratio,
    window_mismatch,
    rate_mismatch,
    config_violation,
    horizon_too_short,
    parse_error,
    non_monotone_timestamps,
    empty_file,
    all_traces_failed,
    io_error,
};

const char* errc_name(errc c);

// Single exception type for the whole library; the code survives the trip
// through the C API where it maps 1:1 onto nq_status values.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace nyqmon

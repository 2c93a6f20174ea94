#include "errors.hpp"

namespace nyqmon {

const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::empty_trace: return "EmptyTrace";
    case errc::gap_too_large: return "GapTooLarge";
    case errc::invalid_rate: return "InvalidRate";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::empty_series: return "EmptySeries";
    case errc::missing_coefficients: return "MissingCoefficients";
    case errc::too_short: return "TooShort";
    case errc::degenerate_signal: return "DegenerateSignal";
    case errc::invalid_cutoff: return "InvalidCutoff";
    case errc::invalid_target_rate: return "InvalidTargetRate";
    case errc::integer_ratio: return "IntegerRatio";
    case errc::window_mismatch: return "WindowMismatch";
    case errc::rate_mismatch: return "RateMismatch";
    case errc::config_violation: return "ConfigViolation";
    case errc::horizon_too_short: return "HorizonTooShort";
    case errc::parse_error: return "ParseError";
    case errc::non_monotone_timestamps: return "NonMonotoneTimestamps";
    case errc::empty_file: return "EmptyFile";
    case errc::all_traces_failed: return "AllTracesFailed";
    case errc::io_error: return "IoError";
    }
    return "Unknown";
}

} // namespace nyqmon

#pragma once

#include "spectral.hpp"

namespace nyqmon {

// A pair of concurrent sampling rates. Folding maps a hidden tone f to
// |f - k*fs|, which depends on fs, so the same tone lands on different
// apparent frequencies in the two streams unless f is below both folds.
// With an integer rate ratio every fold of the slow grid is also a fold of
// the fast one and the trick collapses; planning rejects that.
struct DualRatePlan {
    double f1 = 0.0; // faster probe rate
    double f2 = 0.0; // base rate under test
    double ratio() const { return f1 / f2; }
};

DualRatePlan plan_dual_rates(double base_rate, double ratio = 1.5);

// Zeroes every bin whose implied component amplitude 2*sqrt(psd)/N falls
// below the floor. Coefficients, when present, are zeroed alongside.
Spectrum denoise_spectrum(Spectrum s, double amplitude_floor);

struct AliasDetectOptions {
    double threshold = 0.1;       // discrepancy above this means aliased
    double denoise_amplitude = 0.0; // 0 disables the floor
};

struct AliasDecision {
    bool aliased = false;
    double discrepancy = 0.0; // normalized spectral distance in [0, 1]
    double threshold = 0.0;
    double band_max_hz = 0.0; // comparison band is (0, band_max_hz]
};

// Compares the two streams' normalized power distributions over the band
// both can represent, (0, f2/2]. Distributions that disagree there mean at
// least one stream is folding. Tones above f1/2 that fold onto the same
// apparent frequency in both streams stay invisible; the plan's guaranteed
// coverage is (f2/2, f1/2).
AliasDecision detect_aliasing(const Spectrum& fast, const Spectrum& slow,
                              const DualRatePlan& plan,
                              const AliasDetectOptions& options = {});

} // namespace nyqmon

#pragma once

#include <complex>
#include <vector>

namespace nyqmon::detail {

// In-place DFT of arbitrary length N >= 1. Radix-2 iterative for powers of
// two, Bluestein's chirp-z otherwise. The inverse applies the 1/N scale, so
// fft(fft(x), inverse=true) == x up to rounding.
void fft(std::vector<std::complex<double>>& a, bool inverse);

} // namespace nyqmon::detail

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "series.hpp"

namespace nyqmon {

/// One-sided consumers read bins 0..floor(N/2); the full coefficient vector is
/// kept so the transform stays invertible.
struct Spectrum {
    double sampling_rate = 0.0; // Hz of the series the spectrum came from
    double start_time = 0.0;    // carried through so round trips keep their timeline
    std::string metric_name;
    std::string device_id;
    std::string unit;
    std::vector<std::complex<double>> coeffs; // empty for magnitude-only spectra
    std::vector<double> psd;                  // |coeff|^2 per bin

    std::size_t bin_count() const { return psd.size(); }
    double bin_width() const { return sampling_rate / static_cast<double>(psd.size()); }
    double frequency(std::size_t j) const { return static_cast<double>(j) * bin_width(); }
};

/// Either a concrete rate in Hz or the verdict that the series was already
/// sampled too slowly for the rate to be recovered from its spectrum.
struct NyquistEstimate {
    bool aliased = false;
    double rate_hz = 0.0;

    static NyquistEstimate rate(double hz) { return {false, hz}; }
    static NyquistEstimate make_aliased() { return {true, 0.0}; }
    /// Export encoding: the rate, or -1 for aliased.
    double sentinel() const { return aliased ? -1.0 : rate_hz; }
};

inline constexpr double kDefaultEnergyFraction = 0.99;

/// Unnormalized forward transform: coeffs[k] = sum_n x[n] e^{-2pi i nk/N}.
/// Any length >= 1. Parseval holds as sum x^2 == (1/N) sum psd.
Spectrum dft(const UniformSeries& us);

/// Exact inverse of dft up to rounding; imaginary residue is dropped, which
/// is only lossless for conjugate-symmetric coefficient vectors.
UniformSeries inverse_dft(const Spectrum& s);

double total_energy(const Spectrum& s, bool exclude_dc);

/// Smallest rate that captures `energy_fraction` of the DC-excluded energy:
/// the mean is subtracted, PSD bins 1..floor(N/2) are accumulated in
/// ascending frequency with the conjugate half folded in, and the first bin
/// j* reaching the fraction gives Rate = 2 * j* * (rate/N). When j* lands in
/// the top (1-fraction) sliver of the band the spectrum is indistinguishable
/// from one that kept folding, so the verdict is Aliased instead of a rate.
NyquistEstimate estimate_nyquist(const UniformSeries& us,
                                 double energy_fraction = kDefaultEnergyFraction);

/// Zero every bin strictly above cutoff_hz, resample to target_rate by
/// frequency-domain zero padding, amplitude preserved. cutoff_hz must not
/// exceed rate/2 and target_rate must not be below the input rate.
UniformSeries low_pass_reconstruct(const UniformSeries& us, double cutoff_hz,
                                   double target_rate);

/// low_pass_reconstruct followed by re-quantization onto the given grid, so a
/// reconstruction whose residual error stays under quantum/2 lands exactly on
/// the original readings.
UniformSeries reconstruct_with_quantization(const UniformSeries& us, double cutoff_hz,
                                            double target_rate, const QuantizationSpec& qs);

} // namespace nyqmon

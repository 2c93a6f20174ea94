#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "fft.hpp"

namespace nyqmon {

Spectrum dft(const UniformSeries& us) {
    validate(us);
    if (us.values.empty())
        fail(errc::empty_series, "dft: series is empty");

    std::vector<std::complex<double>> c(us.values.begin(), us.values.end());
    detail::fft(c, false);

    Spectrum s;
    s.sampling_rate = us.rate;
    s.start_time = us.start_time;
    s.metric_name = us.metric_name;
    s.device_id = us.device_id;
    s.unit = us.unit;
    s.psd.resize(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        s.psd[j] = std::norm(c[j]);
    s.coeffs = std::move(c);
    return s;
}

UniformSeries inverse_dft(const Spectrum& s) {
    if (s.coeffs.empty())
        fail(errc::missing_coefficients,
             "inverse_dft: spectrum carries no complex coefficients");
    if (!(s.sampling_rate > 0.0))
        fail(errc::invalid_rate, "inverse_dft: spectrum has no positive sampling rate");

    std::vector<std::complex<double>> c = s.coeffs;
    detail::fft(c, true);

    UniformSeries us;
    us.metric_name = s.metric_name;
    us.device_id = s.device_id;
    us.unit = s.unit;
    us.start_time = s.start_time;
    us.rate = s.sampling_rate;
    us.values.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        us.values[i] = c[i].real();
    return us;
}

double total_energy(const Spectrum& s, bool exclude_dc) {
    const std::size_t from = exclude_dc ? 1 : 0;
    double acc = 0.0;
    for (std::size_t j = from; j < s.psd.size(); ++j)
        acc += s.psd[j];
    return acc;
}

NyquistEstimate estimate_nyquist(const UniformSeries& us, double energy_fraction) {
    validate(us);
    if (!(energy_fraction > 0.0) || !(energy_fraction < 1.0))
        fail(errc::invalid_argument, "estimate_nyquist: energy_fraction must be in (0, 1)");
    const std::size_t n = us.values.size();
    if (n < 8)
        fail(errc::too_short,
             "estimate_nyquist: need at least 8 samples, got " + std::to_string(n));

    double mean = 0.0;
    double max_abs = 0.0;
    for (double v : us.values) {
        mean += v;
        max_abs = std::max(max_abs, std::abs(v));
    }
    mean /= static_cast<double>(n);

    std::vector<std::complex<double>> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = us.values[i] - mean;
    detail::fft(c, false);

    std::vector<double> psd(n);
    for (std::size_t j = 0; j < n; ++j)
        psd[j] = std::norm(c[j]);

    double total = 0.0;
    for (std::size_t j = 1; j < n; ++j)
        total += psd[j];
    // Spectral energy scales as N * sum x^2, so the floor scales the same way.
    if (total <= 1e-12 * static_cast<double>(n) * max_abs * max_abs)
        fail(errc::degenerate_signal,
             "estimate_nyquist: signal has no energy beyond its mean");

    const std::size_t half = n / 2;
    const double target = energy_fraction * total;
    double cum = 0.0;
    std::size_t jstar = half;
    for (std::size_t j = 1; j <= half; ++j) {
        cum += psd[j];
        if (j != n - j)
            cum += psd[n - j]; // conjugate bin; absent only for j == N/2 at even N
        if (cum >= target) {
            jstar = j;
            break;
        }
    }

    // Reaching the fraction only inside the top (1-fraction) sliver of the
    // band means essentially the whole band was needed: report Aliased
    // rather than a rate that merely restates the sampling rate.
    if (static_cast<double>(jstar) >= energy_fraction * static_cast<double>(half))
        return NyquistEstimate::make_aliased();

    return NyquistEstimate::rate(2.0 * static_cast<double>(jstar) * us.rate /
                                 static_cast<double>(n));
}

UniformSeries low_pass_reconstruct(const UniformSeries& us, double cutoff_hz,
                                   double target_rate) {
    validate(us);
    if (us.values.empty())
        fail(errc::empty_series, "low_pass_reconstruct: series is empty");
    if (!std::isfinite(cutoff_hz) || cutoff_hz < 0.0 ||
        cutoff_hz > us.rate / 2.0 * (1.0 + 1e-12))
        fail(errc::invalid_cutoff,
             "low_pass_reconstruct: cutoff must lie in [0, rate/2]");
    if (!std::isfinite(target_rate) || target_rate < us.rate * (1.0 - 1e-12))
        fail(errc::invalid_target_rate,
             "low_pass_reconstruct: target rate must not be below the input rate");

    const std::size_t n = us.values.size();
    const auto m = static_cast<std::size_t>(std::llround(
        static_cast<double>(n) * target_rate / us.rate));

    std::vector<std::complex<double>> x(us.values.begin(), us.values.end());
    detail::fft(x, false);

    std::vector<std::complex<double>> y(std::max<std::size_t>(m, 1));
    const double keep = cutoff_hz * (1.0 + 1e-12) + us.rate * 1e-15;
    y[0] += x[0];
    for (std::size_t j = 1; j <= n / 2; ++j) {
        const double f = static_cast<double>(j) * us.rate / static_cast<double>(n);
        if (f > keep)
            continue;
        if (2 * j == n) {
            // The shared positive/negative bin at rate/2 splits across the
            // wider spectrum; += folds it back onto itself when m == n.
            y[j] += x[j] * 0.5;
            y[(y.size() - j) % y.size()] += x[j] * 0.5;
        } else {
            y[j] += x[j];
            y[y.size() - j] += x[n - j];
        }
    }

    detail::fft(y, true);
    const double rescale = static_cast<double>(y.size()) / static_cast<double>(n);

    UniformSeries out;
    out.metric_name = us.metric_name;
    out.device_id = us.device_id;
    out.unit = us.unit;
    out.start_time = us.start_time;
    out.rate = target_rate;
    out.values.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        out.values[i] = y[i].real() * rescale;
    return out;
}

UniformSeries reconstruct_with_quantization(const UniformSeries& us, double cutoff_hz,
                                            double target_rate, const QuantizationSpec& qs) {
    validate(qs);
    UniformSeries out = low_pass_reconstruct(us, cutoff_hz, target_rate);
    for (auto& v : out.values)
        v = quantize_value(v, qs);
    return out;
}

} // namespace nyqmon

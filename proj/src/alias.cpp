#include "alias.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace nyqmon {

DualRatePlan plan_dual_rates(double base_rate, double ratio) {
    if (!(base_rate > 0.0) || !std::isfinite(base_rate))
        fail(errc::invalid_rate, "dual-rate plan: base rate must be positive");
    if (!(ratio > 1.0) || !std::isfinite(ratio))
        fail(errc::invalid_argument, "dual-rate plan: ratio must exceed 1");
    if (std::abs(ratio - std::round(ratio)) <= 1e-9 * ratio)
        fail(errc::integer_ratio,
             "dual-rate plan: integer ratio " + std::to_string(ratio) +
                 " folds both streams identically; use a non-integer ratio");
    return {base_rate * ratio, base_rate};
}

Spectrum denoise_spectrum(Spectrum s, double amplitude_floor) {
    if (!(amplitude_floor >= 0.0) || !std::isfinite(amplitude_floor))
        fail(errc::invalid_argument, "denoise: amplitude floor must be >= 0");
    if (amplitude_floor == 0.0 || s.psd.empty())
        return s;
    const double n = static_cast<double>(s.psd.size());
    // amp_j = 2*sqrt(psd_j)/N  =>  cut where psd_j < (floor*N/2)^2
    const double cut = amplitude_floor * n / 2.0;
    const double cut2 = cut * cut;
    for (std::size_t j = 0; j < s.psd.size(); ++j) {
        if (s.psd[j] < cut2) {
            s.psd[j] = 0.0;
            if (j < s.coeffs.size())
                s.coeffs[j] = {0.0, 0.0};
        }
    }
    return s;
}

namespace {

// One-sided power profile, DC forced to zero, scaled by the inverse of its
// own total so the two streams compare shape rather than scale. A total that
// is negligible next to the DC power is transform round-off from a flat
// signal, not structure; normalizing it would turn noise into a shape, so
// the profile stays zero instead.
std::vector<double> normalized_profile(const Spectrum& s) {
    const std::size_t n = s.psd.size();
    std::vector<double> v(n / 2 + 1, 0.0);
    double total = 0.0;
    for (std::size_t j = 1; j <= n / 2; ++j) {
        v[j] = s.psd[j];
        total += v[j];
    }
    const double dc = s.psd.empty() ? 0.0 : s.psd[0];
    if (total > 1e-12 * (total + dc))
        for (auto& x : v)
            x /= total;
    else
        std::fill(v.begin(), v.end(), 0.0);
    return v;
}

double interp(const std::vector<double>& v, double pos) {
    if (pos <= 0.0)
        return v.front();
    const auto last = static_cast<double>(v.size() - 1);
    if (pos >= last)
        return v.back();
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return v[i] * (1.0 - frac) + v[i + 1] * frac;
}

} // namespace

AliasDecision detect_aliasing(const Spectrum& fast, const Spectrum& slow,
                              const DualRatePlan& plan,
                              const AliasDetectOptions& options) {
    if (!(plan.f2 > 0.0) || !(plan.f1 > plan.f2))
        fail(errc::invalid_argument, "detect: plan must have f1 > f2 > 0");
    if (!(options.threshold > 0.0) || !std::isfinite(options.threshold))
        fail(errc::invalid_argument, "detect: threshold must be positive");
    if (fast.psd.empty() || slow.psd.empty())
        fail(errc::empty_series, "detect: both spectra need at least one bin");
    if (std::abs(fast.sampling_rate - plan.f1) > 1e-9 * plan.f1)
        fail(errc::rate_mismatch, "detect: fast stream rate " +
                                      std::to_string(fast.sampling_rate) +
                                      " does not match plan f1");
    if (std::abs(slow.sampling_rate - plan.f2) > 1e-9 * plan.f2)
        fail(errc::rate_mismatch, "detect: slow stream rate " +
                                      std::to_string(slow.sampling_rate) +
                                      " does not match plan f2");

    // Streams must describe the same window: starts within one slow-stream
    // interval, durations within 1%.
    const double t1 = static_cast<double>(fast.psd.size()) / plan.f1;
    const double t2 = static_cast<double>(slow.psd.size()) / plan.f2;
    if (std::abs(fast.start_time - slow.start_time) > 1.0 / plan.f2 * (1.0 + 1e-9))
        fail(errc::window_mismatch, "detect: stream start times differ");
    if (std::abs(t1 - t2) > 0.01 * std::max(t1, t2))
        fail(errc::window_mismatch, "detect: stream durations differ");

    const Spectrum* pf = &fast;
    const Spectrum* ps = &slow;
    Spectrum df, ds;
    if (options.denoise_amplitude > 0.0) {
        df = denoise_spectrum(fast, options.denoise_amplitude);
        ds = denoise_spectrum(slow, options.denoise_amplitude);
        pf = &df;
        ps = &ds;
    }

    const auto vf = normalized_profile(*pf);
    const auto vs = normalized_profile(*ps);
    const double width_f = pf->bin_width();
    const double width_s = ps->bin_width();
    const double band_max = plan.f2 / 2.0;

    double diff2 = 0.0, na2 = 0.0, nb2 = 0.0;
    for (std::size_t j = 1; j < vs.size(); ++j) {
        const double f = static_cast<double>(j) * width_s;
        if (f > band_max * (1.0 + 1e-9))
            break;
        const double a = interp(vf, f / width_f);
        const double b = vs[j];
        diff2 += (a - b) * (a - b);
        na2 += a * a;
        nb2 += b * b;
    }

    AliasDecision d;
    d.threshold = options.threshold;
    d.band_max_hz = band_max;
    const double denom = std::sqrt(std::max(na2, nb2));
    if (denom == 0.0) {
        // Neither stream sees any in-band structure; nothing to disagree on.
        d.discrepancy = 0.0;
    } else {
        d.discrepancy = std::sqrt(diff2) / denom;
    }
    d.aliased = d.discrepancy > d.threshold;
    return d;
}

} // namespace nyqmon

#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "errors.hpp"
#include "oracles.hpp"
#include "series.hpp"
#include "spectral.hpp"
#include "synth.hpp"

using namespace nyqmon;

namespace {

UniformSeries random_series(std::mt19937_64& rng, std::size_t n, double rate) {
    std::uniform_real_distribution<double> val(-5, 5);
    UniformSeries us;
    us.metric_name = "rand";
    us.rate = rate;
    us.values.resize(n);
    for (auto& v : us.values)
        v = val(rng);
    return us;
}

// Real series whose PSD is exactly flat: unit-magnitude random-phase
// coefficients with conjugate symmetry, brought back by the inverse
// transform. The archetype of a spectrum that keeps folding.
UniformSeries flat_spectrum_series(std::mt19937_64& rng, std::size_t n, double rate) {
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    Spectrum s;
    s.sampling_rate = rate;
    s.coeffs.resize(n);
    s.coeffs[0] = {1.0, 0.0};
    for (std::size_t j = 1; j < (n + 1) / 2; ++j) {
        s.coeffs[j] = std::polar(1.0, ph(rng));
        s.coeffs[n - j] = std::conj(s.coeffs[j]);
    }
    if (n % 2 == 0)
        s.coeffs[n / 2] = {(rng() & 1) ? 1.0 : -1.0, 0.0};
    s.psd.assign(n, 1.0);
    return inverse_dft(s);
}

double max_coeff_err(const Spectrum& got, const std::vector<std::complex<double>>& want) {
    double norm = 0.0;
    for (const auto& c : want)
        norm += std::norm(c);
    norm = std::sqrt(norm);
    double worst = 0.0;
    for (std::size_t j = 0; j < want.size(); ++j)
        worst = std::max(worst, std::abs(got.coeffs[j] - want[j]));
    return norm == 0.0 ? worst : worst / norm;
}

} // namespace

TEST_SUITE("spectral") {

TEST_CASE("dft of a constant concentrates in the DC bin") {
    UniformSeries us;
    us.rate = 10.0;
    us.values.assign(16, 3.0);
    const auto s = dft(us);
    CHECK(s.psd[0] == doctest::Approx(16.0 * 3.0 * 16.0 * 3.0));
    for (std::size_t j = 1; j < 16; ++j)
        CHECK(s.psd[j] <= 1e-18 * s.psd[0]);
    CHECK(s.bin_width() == doctest::Approx(10.0 / 16.0));
    CHECK(s.frequency(4) == doctest::Approx(2.5));
}

TEST_CASE("dft of a bin-aligned sinusoid puts all energy in the pair of conjugate bins") {
    const std::size_t n = 64;
    UniformSeries us;
    us.rate = 64.0;
    us.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        us.values[i] = 2.0 * std::sin(2.0 * std::numbers::pi * 5.0 * static_cast<double>(i) / 64.0);
    const auto s = dft(us);
    const double peak = n * 2.0 / 2.0; // |X_k| = N * amplitude / 2
    CHECK(std::sqrt(s.psd[5]) == doctest::Approx(peak).epsilon(1e-9));
    CHECK(std::sqrt(s.psd[n - 5]) == doctest::Approx(peak).epsilon(1e-9));
    for (std::size_t j = 0; j < n; ++j)
        if (j != 5 && j != n - 5)
            CHECK(s.psd[j] <= 1e-16 * s.psd[5]);
}

TEST_CASE("dft agrees with the direct O(N^2) oracle, power-of-two and not") {
    std::mt19937_64 rng(8001);
    for (std::size_t n : {1ul, 2ul, 8ul, 12ul, 100ul, 128ul, 481ul, 1000ul}) {
        const auto us = random_series(rng, n, 50.0);
        const auto s = dft(us);
        const auto want = oracle::dft_direct(us.values);
        CHECK(max_coeff_err(s, want) <= 1e-11);
    }
}

TEST_CASE("transform round trip is the identity within 1e-9") {
    std::mt19937_64 rng(8002);
    for (std::size_t n : {8ul, 64ul, 1000ul, 4096ul, 65536ul}) {
        const auto us = random_series(rng, n, 100.0);
        const auto back = inverse_dft(dft(us));
        CHECK(back.rate == us.rate);
        REQUIRE(back.values.size() == n);
        CHECK(oracle::rel_l2(back.values, us.values) <= 1e-9);
    }
}

TEST_CASE("Parseval: time energy equals (1/N) of spectral energy") {
    std::mt19937_64 rng(8003);
    for (std::size_t n : {8ul, 64ul, 1000ul, 4096ul}) {
        const auto us = random_series(rng, n, 1.0);
        const auto s = dft(us);
        double time_energy = 0.0;
        for (double v : us.values)
            time_energy += v * v;
        const double spec_energy = total_energy(s, false) / static_cast<double>(n);
        CHECK(time_energy == doctest::Approx(spec_energy).epsilon(1e-12));
    }
}

TEST_CASE("inverse of a hand-built conjugate pair is the closed-form sinusoid") {
    const std::size_t n = 32;
    Spectrum s;
    s.sampling_rate = 32.0;
    s.coeffs.assign(n, {0.0, 0.0});
    // X_3 = -i*N*A/2 with A=1.5 encodes 1.5*sin(2*pi*3*t/N).
    s.coeffs[3] = {0.0, -static_cast<double>(n) * 1.5 / 2.0};
    s.coeffs[n - 3] = std::conj(s.coeffs[3]);
    s.psd.assign(n, 0.0);
    const auto us = inverse_dft(s);
    for (std::size_t i = 0; i < n; ++i) {
        const double want =
            1.5 * std::sin(2.0 * std::numbers::pi * 3.0 * static_cast<double>(i) / 32.0);
        CHECK(us.values[i] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("inverse_dft refuses magnitude-only spectra") {
    Spectrum s;
    s.sampling_rate = 1.0;
    s.psd.assign(8, 1.0);
    try {
        inverse_dft(s);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::missing_coefficients);
    }
}

TEST_CASE("dft refuses an empty series") {
    UniformSeries us;
    us.rate = 1.0;
    try {
        dft(us);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_series);
    }
}

TEST_CASE("total_energy with and without the DC bin") {
    Spectrum s;
    s.sampling_rate = 1.0;
    s.psd = {4.0, 1.0, 1.0};
    CHECK(total_energy(s, false) == doctest::Approx(6.0));
    CHECK(total_energy(s, true) == doctest::Approx(2.0));
}

TEST_CASE("estimate_nyquist recovers the band edge of a two-tone signal") {
    SignalSpec spec;
    spec.components = {{400.0, 1.0, 0.0}, {440.0, 1.0, 0.0}};
    const auto us = generate(spec, 8000.0, 0.1);
    const auto est = estimate_nyquist(us);
    REQUIRE_FALSE(est.aliased);
    CHECK(est.rate_hz == doctest::Approx(880.0).epsilon(1e-12));
}

TEST_CASE("estimate_nyquist lands on twice the bin of a lone sinusoid") {
    SignalSpec spec;
    spec.components = {{5.0, 1.0, 0.3}};
    const auto us = generate(spec, 100.0, 1.6);
    const auto est = estimate_nyquist(us);
    REQUIRE_FALSE(est.aliased);
    CHECK(est.rate_hz == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(est.sentinel() == est.rate_hz);
}

TEST_CASE("estimate_nyquist is invariant to offset and scale") {
    SignalSpec spec;
    spec.components = {{3.0, 1.0, 0.0}, {7.0, 0.5, 1.0}};
    const auto us = generate(spec, 64.0, 2.0);
    const auto base = estimate_nyquist(us);
    UniformSeries shifted = us;
    for (auto& v : shifted.values)
        v = 40.0 * v + 1000.0;
    const auto moved = estimate_nyquist(shifted);
    REQUIRE_FALSE(base.aliased);
    REQUIRE_FALSE(moved.aliased);
    CHECK(moved.rate_hz == doctest::Approx(base.rate_hz).epsilon(1e-12));
}

TEST_CASE("estimate_nyquist rate is monotone in the energy fraction") {
    SignalSpec spec;
    spec.components = {{2.0, 10.0, 0.0}, {11.0, 1.0, 0.0}, {23.0, 0.8, 0.0}};
    const auto us = generate(spec, 128.0, 2.0);
    double prev = 0.0;
    for (double frac : {0.5, 0.9, 0.99}) {
        const auto est = estimate_nyquist(us, frac);
        REQUIRE_FALSE(est.aliased);
        CHECK(est.rate_hz >= prev);
        prev = est.rate_hz;
    }
}

TEST_CASE("estimate_nyquist flags an exactly flat spectrum as aliased") {
    std::mt19937_64 rng(8004);
    for (std::size_t n : {256ul, 1024ul}) {
        const auto us = flat_spectrum_series(rng, n, 10.0);
        const auto est = estimate_nyquist(us);
        CHECK(est.aliased);
        CHECK(est.sentinel() == -1.0);
        CHECK(oracle::nyquist_direct(us.values, us.rate, 0.99) == -1.0);
    }
}

TEST_CASE("estimate_nyquist matches the direct-DFT estimator on random band-limited specs") {
    std::mt19937_64 rng(8005);
    std::uniform_int_distribution<int> ncomp(1, 5);
    std::uniform_real_distribution<double> amp(1.0, 4.0);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 256;
        const double rate = 64.0;
        SignalSpec spec;
        std::uniform_int_distribution<int> bin(1, 30);
        const int k = ncomp(rng);
        for (int i = 0; i < k; ++i)
            spec.components.push_back({bin(rng) * rate / static_cast<double>(n), amp(rng), 0.4});
        const auto us = generate(spec, rate, static_cast<double>(n) / rate);
        REQUIRE(us.values.size() == n);
        const auto est = estimate_nyquist(us);
        const double want = oracle::nyquist_direct(us.values, rate, 0.99);
        if (est.aliased) {
            CHECK(want == -1.0);
        } else {
            CHECK(est.rate_hz == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("estimate_nyquist refuses series shorter than 8 samples") {
    UniformSeries us;
    us.rate = 1.0;
    us.values = {1, 2, 3, 4, 5, 6, 7};
    try {
        estimate_nyquist(us);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::too_short);
    }
}

TEST_CASE("estimate_nyquist refuses signals with no energy beyond the mean") {
    UniformSeries us;
    us.rate = 1.0;
    us.values.assign(64, 5.0);
    try {
        estimate_nyquist(us);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_signal);
    }
    // All-zero input is just as degenerate.
    us.values.assign(64, 0.0);
    CHECK_THROWS_AS(estimate_nyquist(us), error);
}

TEST_CASE("estimate_nyquist validates the energy fraction") {
    UniformSeries us;
    us.rate = 1.0;
    us.values.assign(16, 0.0);
    for (std::size_t i = 0; i < 16; ++i)
        us.values[i] = std::sin(0.7 * static_cast<double>(i));
    CHECK_THROWS_AS(estimate_nyquist(us, 0.0), error);
    CHECK_THROWS_AS(estimate_nyquist(us, 1.0), error);
    CHECK_THROWS_AS(estimate_nyquist(us, -0.5), error);
}

TEST_CASE("low_pass_reconstruct with a permissive cutoff at the same rate is the identity") {
    SignalSpec spec;
    spec.components = {{3.0, 1.0, 0.0}, {9.0, 0.25, 0.7}};
    spec.offset = 2.0;
    const auto us = generate(spec, 50.0, 2.0);
    const auto out = low_pass_reconstruct(us, 25.0, 50.0);
    REQUIRE(out.values.size() == us.values.size());
    CHECK(oracle::rel_l2(out.values, us.values) <= 1e-12);
}

TEST_CASE("upsampling a bin-aligned signal reproduces direct generation") {
    SignalSpec spec;
    spec.components = {{4.0, 1.0, 0.0}, {10.0, 0.5, 1.1}};
    const auto coarse = generate(spec, 50.0, 2.0);
    const auto fine = low_pass_reconstruct(coarse, 25.0, 400.0);
    const auto direct = generate(spec, 400.0, 2.0);
    REQUIRE(fine.values.size() == direct.values.size());
    CHECK(oracle::rel_l2(fine.values, direct.values) <= 1e-9);
}

TEST_CASE("a cosine exactly at the fold frequency survives critical upsampling") {
    const std::size_t n = 8;
    UniformSeries us;
    us.rate = 8.0;
    us.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        us.values[i] = std::cos(2.0 * std::numbers::pi * 4.0 * static_cast<double>(i) / 8.0);
    const auto fine = low_pass_reconstruct(us, 4.0, 16.0);
    REQUIRE(fine.values.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) {
        const double want = std::cos(2.0 * std::numbers::pi * 4.0 * static_cast<double>(i) / 16.0);
        CHECK(fine.values[i] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("low_pass_reconstruct removes components above the cutoff") {
    SignalSpec spec;
    spec.components = {{400.0, 1.0, 0.0}, {440.0, 1.0, 0.0}};
    const auto us = generate(spec, 2000.0, 1.0);
    const auto filtered = low_pass_reconstruct(us, 420.0, 2000.0);
    const auto s = dft(filtered);
    // Duration 1 s puts the tones at bins 400 and 440 exactly.
    CHECK(s.psd[440] <= 1e-9 * s.psd[400]);
    CHECK(std::sqrt(s.psd[400]) == doctest::Approx(2000.0 / 2.0).epsilon(1e-9));
}

TEST_CASE("low_pass_reconstruct validates cutoff and target rate") {
    SignalSpec spec;
    spec.components = {{1.0, 1.0, 0.0}};
    const auto us = generate(spec, 10.0, 1.0);
    try {
        low_pass_reconstruct(us, 5.5, 20.0);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_cutoff);
    }
    try {
        low_pass_reconstruct(us, -0.1, 20.0);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_cutoff);
    }
    try {
        low_pass_reconstruct(us, 2.0, 5.0);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_target_rate);
    }
}

TEST_CASE("decimating to the estimated rate and reconstructing comes back within 1e-6") {
    // Top component in cosine phase so the critical bin survives resampling.
    SignalSpec spec;
    spec.components = {{2.0, 1.0, 0.0}, {4.0, 0.5, std::numbers::pi / 2.0}};
    const auto us = generate(spec, 64.0, 2.0);
    const auto est = estimate_nyquist(us);
    REQUIRE_FALSE(est.aliased);
    CHECK(est.rate_hz == doctest::Approx(8.0));
    const auto dec = decimate(us, est.rate_hz);
    const auto back = low_pass_reconstruct(dec, est.rate_hz / 2.0, 64.0);
    REQUIRE(back.values.size() == us.values.size());
    CHECK(oracle::rel_l2(back.values, us.values) <= 1e-6);
}

TEST_CASE("reconstruct_with_quantization with a vanishing quantum behaves like the plain path") {
    SignalSpec spec;
    spec.components = {{2.0, 1.0, 0.0}};
    const auto us = generate(spec, 32.0, 1.0);
    const auto plain = low_pass_reconstruct(us, 16.0, 64.0);
    const auto quant = reconstruct_with_quantization(us, 16.0, 64.0, {1e-12, 0.0});
    REQUIRE(plain.values.size() == quant.values.size());
    for (std::size_t i = 0; i < plain.values.size(); ++i)
        CHECK(std::abs(plain.values[i] - quant.values[i]) <= 1e-9);
}

TEST_CASE("matching quantization snaps a clean reconstruction to exact equality") {
    // A cosine sampled at 4x its frequency lands exactly on the half-unit
    // grid (12, 10, 8, 10, ...), so storage quantization is lossless and the
    // only reconstruction residual is rounding noise far below quantum/2.
    // Re-quantizing erases that noise entirely.
    SignalSpec spec;
    spec.components = {{1.0, 2.0, std::numbers::pi / 2.0}};
    spec.offset = 10.0;
    const QuantizationSpec qs{0.5, 0.0};
    const auto clean = generate(spec, 4.0, 4.0);
    const auto stored = quantize(clean, qs);
    const auto round = reconstruct_with_quantization(stored, 1.0, 4.0, qs);
    CHECK(l2_distance(round, stored) == 0.0);
}

} // TEST_SUITE

#include "fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace nyqmon::detail {
namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n)
        p <<= 1;
    return p;
}

void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2)
        return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }

    // Root table indexed by j/(n/len): one polar() per entry keeps twiddle
    // error flat instead of accumulating through repeated multiplication.
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cd> roots(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j)
        roots[j] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(j) /
                                       static_cast<double>(n));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cd w = roots[k * stride];
                const cd u = a[i + k];
                const cd v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

// Chirp-z: X_k = w_k * (x_n w_n  conv  conj(w)_n) with w_n = exp(-i pi n^2 / N),
// convolution done circularly at the next power of two >= 2N-1. The n^2
// exponent is reduced mod 2N first so the angle stays small and accurate.
void fft_bluestein(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    const auto two_n = static_cast<std::uint64_t>(2 * n);

    std::vector<cd> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t sq = (static_cast<std::uint64_t>(i) * i) % two_n;
        w[i] = std::polar(1.0, sign * std::numbers::pi * static_cast<double>(sq) /
                                   static_cast<double>(n));
    }

    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cd> fa(m), fb(m);
    for (std::size_t i = 0; i < n; ++i)
        fa[i] = a[i] * w[i];
    fb[0] = std::conj(w[0]);
    for (std::size_t i = 1; i < n; ++i)
        fb[i] = fb[m - i] = std::conj(w[i]);

    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t i = 0; i < m; ++i)
        fa[i] *= fb[i];
    fft_pow2(fa, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = fa[i] * scale * w[i];
}

} // namespace

void fft(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1)
        return;
    if (is_pow2(n))
        fft_pow2(a, inverse);
    else
        fft_bluestein(a, inverse);
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& v : a)
            v *= scale;
    }
}

} // namespace nyqmon::detail

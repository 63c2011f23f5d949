#include "qwoa/fft.hpp"

#include "qwoa/errors.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qwoa {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

// Exact exp(sign * 2*pi*i * num / den) with the angle reduced modulo den
// before evaluation, keeping sin/cos arguments small.
cdouble root_of_unity(int sign, std::uint64_t num, std::uint64_t den) {
    double angle = two_pi * static_cast<double>(num % den) / static_cast<double>(den);
    return std::polar(1.0, sign < 0 ? -angle : angle);
}

void dft_naive(std::vector<cdouble>& a, int sign) {
    const std::size_t m = a.size();
    std::vector<cdouble> out(m);
    for (std::size_t j = 0; j < m; ++j) {
        cdouble acc = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            acc += a[k] * root_of_unity(sign, j * k, m);
        out[j] = acc;
    }
    a.swap(out);
}

// Iterative Cooley-Tukey, m a power of two.
void fft_radix2(std::vector<cdouble>& a, int sign) {
    const std::size_t m = a.size();
    for (std::size_t i = 1, j = 0; i < m; ++i) {
        std::size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
        std::vector<cdouble> twiddle(len / 2);
        for (std::size_t t = 0; t < len / 2; ++t)
            twiddle[t] = root_of_unity(sign, t, len);
        for (std::size_t start = 0; start < m; start += len) {
            for (std::size_t t = 0; t < len / 2; ++t) {
                cdouble even = a[start + t];
                cdouble odd = a[start + t + len / 2] * twiddle[t];
                a[start + t] = even + odd;
                a[start + t + len / 2] = even - odd;
            }
        }
    }
}

// Bluestein chirp-z: an arbitrary-length DFT as a power-of-two convolution.
void fft_bluestein(std::vector<cdouble>& a, int sign) {
    const std::size_t m = a.size();
    std::size_t conv_len = 1;
    while (conv_len < 2 * m - 1) conv_len <<= 1;

    // chirp_n = exp(sign * pi*i * n^2 / m); n^2 reduced modulo 2m.
    std::vector<cdouble> chirp(m);
    for (std::size_t n = 0; n < m; ++n)
        chirp[n] = root_of_unity(sign, (n * n) % (2 * m), 2 * m);

    std::vector<cdouble> lhs(conv_len, 0.0), rhs(conv_len, 0.0);
    for (std::size_t n = 0; n < m; ++n) lhs[n] = a[n] * chirp[n];
    for (std::size_t n = 0; n < m; ++n) {
        rhs[n] = std::conj(chirp[n]);
        if (n > 0) rhs[conv_len - n] = std::conj(chirp[n]);
    }

    fft_radix2(lhs, +1);
    fft_radix2(rhs, +1);
    for (std::size_t i = 0; i < conv_len; ++i) lhs[i] *= rhs[i];
    fft_radix2(lhs, -1);

    const double scale = 1.0 / static_cast<double>(conv_len);
    for (std::size_t j = 0; j < m; ++j)
        a[j] = lhs[j] * scale * chirp[j];
}

} // namespace

void dft_unnormalized(std::vector<cdouble>& a, int sign) {
    const std::size_t m = a.size();
    if (m <= 1) return;
    if (m < 64 && !is_power_of_two(m)) {
        dft_naive(a, sign);
    } else if (is_power_of_two(m)) {
        fft_radix2(a, sign);
    } else {
        fft_bluestein(a, sign);
    }
}

void dft(std::vector<cdouble>& a, FourierDirection direction) {
    if (a.empty()) throw DimensionError("dft: empty vector");
    dft_unnormalized(a, direction == FourierDirection::Forward ? +1 : -1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(a.size()));
    for (cdouble& v : a) v *= scale;
}

} // namespace qwoa

#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scenval::detail {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative in-place radix-2 Cooley-Tukey; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

}  // namespace

Dft::Dft(std::size_t n) : n_(n) {
  if (n_ < 1) throw std::invalid_argument("Dft: length must be positive");
  if (is_pow2(n_)) return;

  conv_len_ = next_pow2(2 * n_ - 1);
  chirp_.resize(n_);
  // k^2 mod 2n keeps the phase argument small so sin/cos stay accurate.
  const std::size_t two_n = 2 * n_;
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t k2 = (k * k) % two_n;
    const double ang = -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n_);
    chirp_[k] = {std::cos(ang), std::sin(ang)};
  }

  std::vector<std::complex<double>> b(conv_len_, {0.0, 0.0});
  b[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n_; ++k) {
    b[k] = std::conj(chirp_[k]);
    b[conv_len_ - k] = std::conj(chirp_[k]);  // wrap the negative lags
  }
  fft_pow2(b, false);
  chirp_fft_ = std::move(b);
}

std::vector<std::complex<double>> Dft::forward(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("Dft: input length mismatch");

  if (chirp_.empty()) {  // power-of-two fast path
    std::vector<std::complex<double>> a(n_);
    for (std::size_t i = 0; i < n_; ++i) a[i] = {x[i], 0.0};
    fft_pow2(a, false);
    return a;
  }

  // Bluestein: X_k = conj(chirp_k) * sum_n (x_n chirp_n) chirp-convolution.
  std::vector<std::complex<double>> a(conv_len_, {0.0, 0.0});
  for (std::size_t i = 0; i < n_; ++i) a[i] = x[i] * chirp_[i];
  fft_pow2(a, false);
  for (std::size_t i = 0; i < conv_len_; ++i) a[i] *= chirp_fft_[i];
  fft_pow2(a, true);

  std::vector<std::complex<double>> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = a[k] * chirp_[k];
  return out;
}

}  // namespace scenval::detail

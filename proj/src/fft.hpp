#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace scenval::detail {

/// Discrete Fourier transform of a fixed length. Power-of-two lengths run
/// straight radix-2; everything else goes through Bluestein's chirp-z
/// resampling, so the cost stays O(n log n) for any n. The chirp tables are
/// precomputed per length, which makes repeated transforms (Welch segments)
/// cheap.
class Dft {
 public:
  explicit Dft(std::size_t n);

  std::size_t size() const { return n_; }

  /// Full complex spectrum X_0..X_{n-1} of a real input of length n.
  std::vector<std::complex<double>> forward(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::size_t conv_len_ = 0;                   // power-of-two work size
  std::vector<std::complex<double>> chirp_;    // e^{-i pi k^2 / n}
  std::vector<std::complex<double>> chirp_fft_;  // transform of the wrapped conjugate chirp
};

}  // namespace scenval::detail

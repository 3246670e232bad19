#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace ffpat::detail {

/// Owns FFTW buffers and real-to-complex plans for an N x N grid.
///
/// Buffers come from fftw_malloc so every instance gets the same alignment
/// and therefore the same codelets; results are reproducible bit for bit.
class Fourier2D {
 public:
  explicit Fourier2D(std::size_t n);
  ~Fourier2D();
  Fourier2D(const Fourier2D&) = delete;
  Fourier2D& operator=(const Fourier2D&) = delete;

  std::size_t size() const noexcept { return n_; }
  /// Number of complex bins per row of the half spectrum.
  std::size_t half() const noexcept { return n_ / 2 + 1; }
  std::size_t spectrum_size() const noexcept { return n_ * half(); }

  std::span<std::complex<double>> spectrum() noexcept { return {spec_, spectrum_size()}; }

  /// Transforms `in` into spectrum().
  void forward(std::span<const double> in);
  /// Writes the normalised inverse transform of spectrum() to `out`.
  /// spectrum() is clobbered.
  void inverse(std::span<double> out);

 private:
  std::size_t n_;
  double* real_ = nullptr;
  std::complex<double>* spec_ = nullptr;
  void* plan_forward_ = nullptr;
  void* plan_inverse_ = nullptr;
};

}  // namespace ffpat::detail

#include "fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <new>

namespace ffpat::detail {

namespace {
// The FFTW planner is not thread safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fourier2D::Fourier2D(std::size_t n) : n_(n) {
  const int ni = static_cast<int>(n);
  std::lock_guard lock(planner_mutex());
  real_ = static_cast<double*>(fftw_malloc(sizeof(double) * n * n));
  spec_ = static_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * spectrum_size()));
  if (real_ == nullptr || spec_ == nullptr) {
    fftw_free(real_);
    fftw_free(spec_);
    throw std::bad_alloc();
  }
  auto* spec = reinterpret_cast<fftw_complex*>(spec_);
  plan_forward_ = fftw_plan_dft_r2c_2d(ni, ni, real_, spec, FFTW_ESTIMATE);
  plan_inverse_ = fftw_plan_dft_c2r_2d(ni, ni, spec, real_, FFTW_ESTIMATE);
}

Fourier2D::~Fourier2D() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inverse_));
  fftw_free(real_);
  fftw_free(spec_);
}

void Fourier2D::forward(std::span<const double> in) {
  std::copy(in.begin(), in.end(), real_);
  fftw_execute(static_cast<fftw_plan>(plan_forward_));
}

void Fourier2D::inverse(std::span<double> out) {
  fftw_execute(static_cast<fftw_plan>(plan_inverse_));
  const double scale = 1.0 / static_cast<double>(n_ * n_);
  for (std::size_t k = 0; k < n_ * n_; ++k) out[k] = real_[k] * scale;
}

}  // namespace ffpat::detail

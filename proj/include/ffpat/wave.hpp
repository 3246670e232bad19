#pragma once

#include <array>
#include <cstddef>

#include "ffpat/field.hpp"
#include "ffpat/grid.hpp"

namespace ffpat {

/// Strictly positive sound speed sampled on the grid.
class SoundSpeed {
 public:
  explicit SoundSpeed(ScalarField values);

  const ScalarField& field() const noexcept { return field_; }
  const Grid& grid() const noexcept { return field_.grid(); }
  double max() const noexcept { return c_max_; }
  double min() const noexcept { return c_min_; }

  /// Uniform speed c on the whole grid.
  static SoundSpeed constant(const Grid& grid, double c = 1.0);

 private:
  ScalarField field_;
  double c_max_;
  double c_min_;
};

/// Throws InvalidArgument unless the speed equals 1 at every exterior index.
void require_unit_exterior_speed(const SoundSpeed& c, const DiscreteDomain& dom);

inline constexpr double kDefaultCfl = 0.3;

struct SolverConfig {
  double final_time = 0.0;
  double dt = 0.0;
  std::size_t steps = 0;
  double cfl = kDefaultCfl;
  /// Speed entering the k-space correction; the maximum sound speed.
  double c_ref = 1.0;
  bool kspace_correction = true;
};

/// dt = T / ceil(T / (cfl * h / c_max)), so T is an exact multiple of dt and
/// dt * c_max / h <= cfl.
SolverConfig make_solver_config(const Grid& grid, double final_time, double c_max,
                                double cfl = kDefaultCfl, bool kspace_correction = true);

struct WaveSnapshot {
  ScalarField pressure;
  /// Estimate of the time derivative of the pressure at the final time.
  ScalarField velocity;
};

/// Fourier multiplier of the discrete Laplacian at wavenumber magnitude
/// |k|: -|k|^2 sinc^2(c_ref |k| dt / 2) with the k-space correction, -|k|^2
/// without it.
double laplacian_symbol(double k_abs, const SolverConfig& cfg);

ScalarField spectral_laplacian(const ScalarField& u, const SolverConfig& cfg);

/// Spectral partial derivatives (d/dx1, d/dx2).  Nyquist bins are dropped so
/// the result stays real.
std::array<ScalarField, 2> spectral_gradient(const ScalarField& u);

/// Solves p_tt = c^2 Lap p on the periodic box with p(0) = f, p_t(0) = 0 up
/// to cfg.final_time using leapfrog in time and the k-space corrected
/// pseudospectral Laplacian in space.
///
/// The scheme is exact for a uniform speed equal to cfg.c_ref.  The velocity
/// is a centred difference across the final step, (p^{M+1} - p^{M-1}) / 2dt,
/// rescaled in Fourier space by theta / sin(theta), theta = c_ref |k| dt; this
/// makes it exact in the same uniform-speed case.
WaveSnapshot propagate(const ScalarField& f, const SoundSpeed& c, const SolverConfig& cfg);

/// Solution at t = 0 of the wave equation with terminal data q(T) = h,
/// q_t(T) = 0.  Substituting s = T - t turns this into propagate(h), so both
/// share one code path.
ScalarField time_reverse(const ScalarField& h, const SoundSpeed& c, const SolverConfig& cfg);

/// h^2 * sum_i [ c^-2 v^2 + |grad p|^2 ] with spectral gradients.
double energy(const WaveSnapshot& snapshot, const SoundSpeed& c);

}  // namespace ffpat

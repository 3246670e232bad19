#include "ffpat/wave.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ffpat/errors.hpp"
#include "fourier.hpp"

namespace ffpat {

namespace {

constexpr std::size_t kNanCheckInterval = 50;

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

double wavenumber_abs(const Grid& grid, std::size_t j1, std::size_t j2) {
  return std::hypot(grid.wavenumber(j1), grid.wavenumber(j2));
}

/// Applies a fixed radial Fourier multiplier to fields on one grid.
class RadialMultiplier {
 public:
  template <class Symbol>
  RadialMultiplier(const Grid& grid, Symbol symbol) : fft_(grid.size()) {
    const std::size_t n = grid.size();
    const std::size_t half = fft_.half();
    symbol_.resize(n * half);
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      for (std::size_t j2 = 0; j2 < half; ++j2) {
        symbol_[j1 * half + j2] = symbol(wavenumber_abs(grid, j1, j2));
      }
    }
  }

  void apply(std::span<const double> in, std::span<double> out) {
    fft_.forward(in);
    auto spec = fft_.spectrum();
    for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= symbol_[k];
    fft_.inverse(out);
  }

 private:
  detail::Fourier2D fft_;
  std::vector<double> symbol_;
};

void validate_config(const Grid& grid, const SoundSpeed& c, const SolverConfig& cfg) {
  if (!(cfg.final_time > 0.0) || !(cfg.dt > 0.0) || cfg.steps == 0) {
    throw InvalidArgument("solver config needs positive final time, time step and step count");
  }
  if (std::abs(cfg.dt * static_cast<double>(cfg.steps) - cfg.final_time) > 1e-12 * cfg.final_time) {
    throw InvalidArgument("final time must be an integer multiple of the time step");
  }
  if (!(grid == c.grid())) {
    throw InvalidArgument("sound speed lives on a different grid");
  }
  const double courant = cfg.dt * c.max() / grid.spacing();
  if (courant > cfg.cfl * (1.0 + 1e-12)) {
    throw InvalidArgument("CFL violation: dt * c_max / h = " + std::to_string(courant) +
                          " exceeds " + std::to_string(cfg.cfl));
  }
  // Plain leapfrog is stable for c |k|_max dt <= 2 with |k|_max = sqrt(2) pi / h.
  const double limit = cfg.kspace_correction ? 1.0 : 2.0 / (std::numbers::sqrt2 * std::numbers::pi);
  if (!(cfg.cfl > 0.0) || cfg.cfl > limit) {
    throw InvalidArgument("CFL number " + std::to_string(cfg.cfl) + " outside (0, " +
                          std::to_string(limit) + "]");
  }
  if (c.max() > cfg.c_ref * (1.0 + 1e-12)) {
    throw InvalidArgument("reference speed is below the maximum sound speed");
  }
}

}  // namespace

SoundSpeed::SoundSpeed(ScalarField values) : field_(std::move(values)) {
  require_finite(field_, "sound speed");
  c_max_ = 0.0;
  c_min_ = std::numeric_limits<double>::infinity();
  for (double v : field_.values()) {
    if (!(v > 0.0)) throw InvalidArgument("sound speed must be strictly positive");
    c_max_ = std::max(c_max_, v);
    c_min_ = std::min(c_min_, v);
  }
}

SoundSpeed SoundSpeed::constant(const Grid& grid, double c) {
  return SoundSpeed(ScalarField(grid, std::vector<double>(grid.count(), c)));
}

void require_unit_exterior_speed(const SoundSpeed& c, const DiscreteDomain& dom) {
  if (!(c.grid() == dom.grid())) throw InvalidArgument("sound speed and domain grids differ");
  for (std::size_t k : dom.exterior()) {
    if (c.field()[k] != 1.0) {
      throw InvalidArgument("sound speed must equal 1 outside the imaging domain");
    }
  }
}

SolverConfig make_solver_config(const Grid& grid, double final_time, double c_max, double cfl,
                                bool kspace_correction) {
  if (!(final_time > 0.0) || !std::isfinite(final_time)) {
    throw InvalidArgument("final time must be positive");
  }
  if (!(c_max > 0.0)) throw InvalidArgument("maximum sound speed must be positive");
  if (!(cfl > 0.0)) throw InvalidArgument("CFL number must be positive");
  SolverConfig cfg;
  cfg.final_time = final_time;
  cfg.cfl = cfl;
  cfg.c_ref = c_max;
  cfg.kspace_correction = kspace_correction;
  const double dt_max = cfl * grid.spacing() / c_max;
  cfg.steps = static_cast<std::size_t>(std::ceil(final_time / dt_max - 1e-12));
  cfg.steps = std::max<std::size_t>(cfg.steps, 1);
  cfg.dt = final_time / static_cast<double>(cfg.steps);
  return cfg;
}

double laplacian_symbol(double k_abs, const SolverConfig& cfg) {
  const double k2 = k_abs * k_abs;
  if (!cfg.kspace_correction) return -k2;
  const double s = sinc(0.5 * cfg.c_ref * k_abs * cfg.dt);
  return -k2 * s * s;
}

ScalarField spectral_laplacian(const ScalarField& u, const SolverConfig& cfg) {
  require_finite(u, "Laplacian input");
  RadialMultiplier lap(u.grid(), [&](double k) { return laplacian_symbol(k, cfg); });
  ScalarField out(u.grid());
  lap.apply(u.values(), out.values());
  return out;
}

std::array<ScalarField, 2> spectral_gradient(const ScalarField& u) {
  const Grid& grid = u.grid();
  const std::size_t n = grid.size();
  detail::Fourier2D fft(n);
  const std::size_t half = fft.half();
  fft.forward(u.values());
  std::vector<std::complex<double>> base(fft.spectrum().begin(), fft.spectrum().end());

  std::array<ScalarField, 2> grad{ScalarField(grid), ScalarField(grid)};
  for (int axis = 0; axis < 2; ++axis) {
    auto spec = fft.spectrum();
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      for (std::size_t j2 = 0; j2 < half; ++j2) {
        const std::size_t j = axis == 0 ? j1 : j2;
        const double k = (j == n / 2) ? 0.0 : grid.wavenumber(j);
        spec[j1 * half + j2] = base[j1 * half + j2] * std::complex<double>(0.0, k);
      }
    }
    fft.inverse(grad[axis].values());
  }
  return grad;
}

WaveSnapshot propagate(const ScalarField& f, const SoundSpeed& c, const SolverConfig& cfg) {
  const Grid& grid = f.grid();
  require_finite(f, "initial pressure");
  validate_config(grid, c, cfg);

  const std::size_t count = grid.count();
  const double dt = cfg.dt;
  std::vector<double> coeff(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double ck = c.field()[k];
    coeff[k] = dt * dt * ck * ck;
  }

  RadialMultiplier lap(grid, [&](double k) { return laplacian_symbol(k, cfg); });
  std::vector<double> prev(f.values().begin(), f.values().end());
  std::vector<double> cur(count);
  std::vector<double> next(count);
  std::vector<double> work(count);

  // Zero initial velocity: p^1 = p^0 + (dt^2 / 2) c^2 L p^0.
  lap.apply(prev, work);
  for (std::size_t k = 0; k < count; ++k) cur[k] = prev[k] + 0.5 * coeff[k] * work[k];

  auto leapfrog = [&] {
    lap.apply(cur, work);
    for (std::size_t k = 0; k < count; ++k) next[k] = 2.0 * cur[k] - prev[k] + coeff[k] * work[k];
    std::swap(prev, cur);
    std::swap(cur, next);
  };

  for (std::size_t step = 1; step < cfg.steps; ++step) {
    leapfrog();
    if ((step + 1) % kNanCheckInterval == 0 &&
        !std::all_of(cur.begin(), cur.end(), [](double v) { return std::isfinite(v); })) {
      throw NumericalError("non-finite pressure at time step " + std::to_string(step + 1));
    }
  }
  // prev = p^{M-1}, cur = p^M.
  WaveSnapshot snap{ScalarField(grid, cur), ScalarField(grid)};
  if (!snap.pressure.all_finite()) {
    throw NumericalError("non-finite pressure at time step " + std::to_string(cfg.steps));
  }

  leapfrog();  // prev = p^M, cur = p^{M+1}; the p^{M-1} values went to `next`.
  std::vector<double> diff(count);
  for (std::size_t k = 0; k < count; ++k) diff[k] = (cur[k] - next[k]) / (2.0 * dt);
  if (cfg.kspace_correction) {
    RadialMultiplier fix(grid, [&](double k) {
      const double theta = cfg.c_ref * k * dt;
      return theta < 1e-8 ? 1.0 : theta / std::sin(theta);
    });
    fix.apply(diff, snap.velocity.values());
  } else {
    std::copy(diff.begin(), diff.end(), snap.velocity.values().begin());
  }
  return snap;
}

ScalarField time_reverse(const ScalarField& h, const SoundSpeed& c, const SolverConfig& cfg) {
  return propagate(h, c, cfg).pressure;
}

double energy(const WaveSnapshot& snapshot, const SoundSpeed& c) {
  require_same_grid(snapshot.pressure, snapshot.velocity);
  require_same_grid(snapshot.pressure, c.field());
  const auto grad = spectral_gradient(snapshot.pressure);
  const double h = snapshot.pressure.grid().spacing();
  double sum = 0.0;
  for (std::size_t k = 0; k < snapshot.pressure.size(); ++k) {
    const double ck = c.field()[k];
    const double v = snapshot.velocity[k];
    sum += v * v / (ck * ck) + grad[0][k] * grad[0][k] + grad[1][k] * grad[1][k];
  }
  return h * h * sum;
}

}  // namespace ffpat

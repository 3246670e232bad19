#include "ffpat/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "ffpat/analysis.hpp"
#include "ffpat/errors.hpp"
#include "ffpat/smooth.hpp"
#include "fourier.hpp"

namespace ffpat {

PipelineConfig make_pipeline(const Grid& grid, const DomainShape& shape, const DiscreteDomain& dom,
                             SoundSpeed c, double final_time, double cfl, bool kspace_correction,
                             DirichletSolveOptions elliptic) {
  if (!(dom.grid() == grid) || !(c.grid() == grid)) {
    throw InvalidArgument("pipeline components live on different grids");
  }
  require_unit_exterior_speed(c, dom);
  if (!(elliptic.tol > 0.0)) throw InvalidArgument("Dirichlet solve tolerance must be positive");
  SolverConfig solver = make_solver_config(grid, final_time, c.max(), cfl, kspace_correction);
  return PipelineConfig{grid, shape, dom, std::move(c), solver, elliptic};
}

ScalarField forward_exterior(const ScalarField& f, const PipelineConfig& cfg) {
  if (!(f.grid() == cfg.grid)) throw InvalidArgument("initial pressure lives on a different grid");
  const ScalarField f_on_i = restrict_to(f, cfg.dom.inside());
  const WaveSnapshot snap = propagate(f_on_i, cfg.c, cfg.solver);
  return restrict_to(snap.pressure, cfg.dom.exterior());
}

ScalarField modified_time_reversal(const ScalarField& g, const PipelineConfig& cfg) {
  if (!(g.grid() == cfg.grid)) throw InvalidArgument("exterior data lives on a different grid");
  const ScalarField extended = harmonic_extension(restrict_to(g, cfg.dom.exterior()), cfg.dom, cfg.elliptic);
  const ScalarField q0 = time_reverse(extended, cfg.c, cfg.solver);
  return project_h10(q0, cfg.dom, cfg.elliptic);
}

void require_relaxation(double lambda) {
  if (!(lambda > 0.0 && lambda <= 2.0)) {
    throw InvalidArgument("relaxation parameter must lie in (0, 2], got " + std::to_string(lambda));
  }
}

ScalarField error_operator(const ScalarField& f, double lambda, const PipelineConfig& cfg) {
  require_relaxation(lambda);
  ScalarField out = restrict_to(f, cfg.dom.inside());
  out.axpy(-lambda, modified_time_reversal(forward_exterior(f, cfg), cfg));
  return out;
}

ScalarField random_smooth_field(const PipelineConfig& cfg, std::uint64_t seed, double smoothing) {
  const Grid& grid = cfg.grid;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> noise(grid.count());
  for (double& v : noise) v = normal(rng);

  detail::Fourier2D fft(grid.size());
  fft.forward(noise);
  auto spec = fft.spectrum();
  const std::size_t half = fft.half();
  for (std::size_t j1 = 0; j1 < grid.size(); ++j1) {
    for (std::size_t j2 = 0; j2 < half; ++j2) {
      const double k1 = grid.wavenumber(j1);
      const double k2 = grid.wavenumber(j2);
      spec[j1 * half + j2] *= std::exp(-0.5 * smoothing * smoothing * (k1 * k1 + k2 * k2));
    }
  }
  ScalarField field(grid);
  fft.inverse(field.values());

  const double r = cfg.shape.radius;
  ScalarField out(grid);
  for (std::size_t k : cfg.dom.inside()) {
    const Point2 x = grid.point(k);
    const double dist = std::hypot(x[0] - cfg.shape.center[0], x[1] - cfg.shape.center[1]);
    out[k] = field[k] * smooth_cutoff(dist, 0.5 * r, 0.7 * r);
  }
  return out;
}

ContractionEstimate estimate_contraction(double lambda, std::size_t trials, std::uint64_t seed,
                                         const PipelineConfig& cfg) {
  const double lambdas[] = {lambda};
  return estimate_contraction(lambdas, trials, seed, cfg).front();
}

std::vector<ContractionEstimate> estimate_contraction(std::span<const double> lambdas,
                                                      std::size_t trials, std::uint64_t seed,
                                                      const PipelineConfig& cfg) {
  if (lambdas.empty()) throw InvalidArgument("no relaxation parameter given");
  for (double lambda : lambdas) require_relaxation(lambda);
  if (trials == 0) throw InvalidArgument("contraction estimate needs at least one trial");

  std::vector<ContractionEstimate> out(lambdas.size());
  for (std::size_t l = 0; l < lambdas.size(); ++l) out[l].lambda = lambdas[l];

  const auto inside = cfg.dom.inside();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed * 0x9E3779B97F4A7C15ull + t;
    const ScalarField f = random_smooth_field(cfg, trial_seed);
    const double norm_f = h10_norm(f, inside);
    const ScalarField awf = modified_time_reversal(forward_exterior(f, cfg), cfg);
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
      ScalarField kf = f;
      kf.axpy(-lambdas[l], awf);
      const double ratio = h10_norm(kf, inside) / norm_f;
      out[l].ratios.push_back(ratio);
      out[l].max_ratio = std::max(out[l].max_ratio, ratio);
    }
  }
  return out;
}

}  // namespace ffpat

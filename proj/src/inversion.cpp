#include "ffpat/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "ffpat/analysis.hpp"
#include "ffpat/errors.hpp"

namespace ffpat {

namespace {

constexpr double kGrowthFactor = 1.5;
constexpr std::size_t kGrowthSteps = 5;

template <class Fn>
auto at_iteration(std::size_t j, Fn&& fn) {
  try {
    return fn();
  } catch (const ConvergenceError& e) {
    throw ConvergenceError("iteration " + std::to_string(j) + ": " + e.what(), e.iterations(),
                           e.residual());
  } catch (const DivergenceError&) {
    throw;
  } catch (const NumericalError& e) {
    throw NumericalError("iteration " + std::to_string(j) + ": " + e.what());
  }
}

}  // namespace

void validate(const ReconConfig& rc) {
  require_relaxation(rc.lambda);
  if (rc.max_iter == 0) throw InvalidArgument("iteration budget must be at least 1");
  if (!(rc.tol >= 0.0)) throw InvalidArgument("stopping tolerance must be non-negative");
}

ReconResult reconstruct(const ScalarField& g, const PipelineConfig& cfg, const ReconConfig& rc,
                        const std::optional<ScalarField>& f_true, const IterateObserver& observer) {
  validate(rc);
  if (!(g.grid() == cfg.grid)) throw InvalidArgument("data grid does not match the pipeline grid");
  if (f_true && !(f_true->grid() == cfg.grid)) {
    throw InvalidArgument("ground truth grid does not match the pipeline grid");
  }
  const auto inside = cfg.dom.inside();
  const auto exterior = cfg.dom.exterior();
  const ScalarField data = restrict_to(g, exterior);
  for (std::size_t k : exterior) {
    if (!std::isfinite(data[k])) throw InvalidArgument("data contains non-finite values");
  }
  const std::optional<ScalarField> truth =
      f_true ? std::optional<ScalarField>(restrict_to(*f_true, inside)) : std::nullopt;

  auto error_of = [&](const ScalarField& f) -> std::optional<double> {
    if (!truth) return std::nullopt;
    return h10_norm(f - *truth, inside);
  };
  auto residual_of = [&](const ScalarField& f) {
    ScalarField r = forward_exterior(f, cfg);
    r -= data;
    return r;
  };

  ScalarField f = at_iteration(0, [&] {
    ScalarField f0 = modified_time_reversal(data, cfg);
    f0 *= rc.lambda;
    return f0;
  });
  if (observer) observer(0, f);
  ScalarField residual = at_iteration(0, [&] { return residual_of(f); });

  ReconResult result{f, {}, h10_norm(residual, exterior), error_of(f)};
  result.log.records.reserve(rc.max_iter);
  double previous = result.initial_residual;
  std::size_t growth_run = 0;

  for (std::size_t j = 1; j <= rc.max_iter; ++j) {
    if (rc.tol > 0.0 && previous <= rc.tol) break;
    at_iteration(j, [&] {
      f.axpy(-rc.lambda, modified_time_reversal(residual, cfg));
      residual = residual_of(f);
      return 0;
    });
    if (observer) observer(j, f);
    const double norm = h10_norm(residual, exterior);
    if (!std::isfinite(norm)) {
      throw NumericalError("iteration " + std::to_string(j) + ": residual is not finite");
    }
    result.log.records.push_back({j, norm, error_of(f)});

    growth_run = (previous > 0.0 && norm > kGrowthFactor * previous) ? growth_run + 1 : 0;
    if (growth_run >= kGrowthSteps) {
      throw DivergenceError("reconstruction diverges: residual grew by more than 50% in " +
                                std::to_string(kGrowthSteps) + " consecutive iterations (iteration " +
                                std::to_string(j) + "); reduce the relaxation parameter",
                            j);
    }
    previous = norm;
  }
  result.f_rec = std::move(f);
  return result;
}

ScalarField add_noise(const ScalarField& g, const DiscreteDomain& dom, double noise_rel,
                      std::uint64_t seed) {
  if (!(noise_rel >= 0.0) || !std::isfinite(noise_rel)) {
    throw InvalidArgument("noise level must be non-negative");
  }
  if (!(g.grid() == dom.grid())) throw InvalidArgument("data and domain grids differ");
  ScalarField out = g;
  if (noise_rel == 0.0) return out;
  double peak = 0.0;
  for (std::size_t k : dom.exterior()) peak = std::max(peak, std::abs(g[k]));
  const double sigma = noise_rel * peak;
  if (sigma == 0.0) return out;

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, sigma);
  for (std::size_t k : dom.exterior()) out[k] += normal(rng);
  return out;
}

ReconResult reconstruct_noisy(const ScalarField& g, double noise_rel, const ReconConfig& rc,
                              const PipelineConfig& cfg, const std::optional<ScalarField>& f_true) {
  validate(rc);
  return reconstruct(add_noise(g, cfg.dom, noise_rel, rc.seed), cfg, rc, f_true);
}

}  // namespace ffpat

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffpat/elliptic.hpp"
#include "ffpat/field.hpp"
#include "ffpat/grid.hpp"
#include "ffpat/wave.hpp"

namespace ffpat {

/// Everything the discrete forward map and its modified time reversal need.
/// Built by make_pipeline, which checks the pieces agree with each other.
struct PipelineConfig {
  Grid grid;
  DomainShape shape;
  DiscreteDomain dom;
  SoundSpeed c;
  SolverConfig solver;
  DirichletSolveOptions elliptic;
};

PipelineConfig make_pipeline(const Grid& grid, const DomainShape& shape, const DiscreteDomain& dom,
                             SoundSpeed c, double final_time, double cfl = kDefaultCfl,
                             bool kspace_correction = true, DirichletSolveOptions elliptic = {});

/// Exterior single-time wave transform: zero-extends f from I, propagates to
/// the final time and keeps the pressure on J.
ScalarField forward_exterior(const ScalarField& f, const PipelineConfig& cfg);

/// Harmonic extension, time reversal, restriction and H^1_0 projection, in
/// that order.  Maps data on J to a field on I with zero trace.
ScalarField modified_time_reversal(const ScalarField& g, const PipelineConfig& cfg);

/// Throws InvalidArgument unless 0 < lambda <= 2.
void require_relaxation(double lambda);

/// f - lambda * modified_time_reversal(forward_exterior(f)).
ScalarField error_operator(const ScalarField& f, double lambda, const PipelineConfig& cfg);

/// Smooth random field on I: Gaussian-filtered white noise (filter width
/// `smoothing`, length units) times a bump that vanishes on the outer 30% of
/// the domain radius.
ScalarField random_smooth_field(const PipelineConfig& cfg, std::uint64_t seed, double smoothing = 0.08);

struct ContractionEstimate {
  double lambda = 0.0;
  double max_ratio = 0.0;
  /// ||K f|| / ||f|| in the discrete H^1_0(I) norm, one entry per trial.
  std::vector<double> ratios;
};

/// Ratio ||K_lambda f|| / ||f|| over `trials` random smooth fields.  Trial t
/// draws its field from a seed derived from (seed, t).
ContractionEstimate estimate_contraction(double lambda, std::size_t trials, std::uint64_t seed,
                                         const PipelineConfig& cfg);

/// Same as above for several relaxation parameters at once.  Each trial
/// needs one forward and one reverse solve regardless of how many lambdas
/// are requested.
std::vector<ContractionEstimate> estimate_contraction(std::span<const double> lambdas,
                                                      std::size_t trials, std::uint64_t seed,
                                                      const PipelineConfig& cfg);

}  // namespace ffpat

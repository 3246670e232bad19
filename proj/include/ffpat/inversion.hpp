#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ffpat/field.hpp"
#include "ffpat/operators.hpp"

namespace ffpat {

struct ReconConfig {
  double lambda = 0.5;
  std::size_t max_iter = 80;
  /// Stop once the residual norm drops to this value; 0 disables the test.
  double tol = 0.0;
  /// Seeds the data noise in reconstruct_noisy.
  std::uint64_t seed = 0;
};

void validate(const ReconConfig& rc);

struct IterationRecord {
  std::size_t iter = 0;
  /// ||W f_j - g|| in the gradient seminorm over J.
  double residual_h10 = 0.0;
  /// ||f_j - f_true|| in the discrete H^1_0(I) norm, when the truth is known.
  std::optional<double> error_h10;
};

struct ConvergenceLog {
  std::vector<IterationRecord> records;
};

struct ReconResult {
  ScalarField f_rec;
  ConvergenceLog log;
  /// Residual and error of the starting iterate f_0 = lambda A g.
  double initial_residual = 0.0;
  std::optional<double> initial_error;
};

/// Called with (j, f_j) for j = 0, 1, ... as the iterates are formed.
using IterateObserver = std::function<void(std::size_t, const ScalarField&)>;

/// Iterative time reversal:
///   f_0 = lambda A g,   f_j = f_{j-1} - lambda A (W f_{j-1} - g),
/// with A the modified time reversal and W the exterior forward map.
///
/// Runs max_iter updates (one log record each) unless the residual reaches
/// rc.tol.  A residual that grows by more than 50% in five consecutive
/// updates raises DivergenceError.
ReconResult reconstruct(const ScalarField& g, const PipelineConfig& cfg, const ReconConfig& rc,
                        const std::optional<ScalarField>& f_true = std::nullopt,
                        const IterateObserver& observer = {});

/// Adds N(0, sigma^2) noise on J with sigma = noise_rel * max_J |g|, drawn
/// from `seed`.  noise_rel = 0 returns g unchanged.
ScalarField add_noise(const ScalarField& g, const DiscreteDomain& dom, double noise_rel,
                      std::uint64_t seed);

/// add_noise with rc.seed followed by reconstruct.  No stopping rule is
/// applied beyond rc.tol.
ReconResult reconstruct_noisy(const ScalarField& g, double noise_rel, const ReconConfig& rc,
                              const PipelineConfig& cfg,
                              const std::optional<ScalarField>& f_true = std::nullopt);

}  // namespace ffpat

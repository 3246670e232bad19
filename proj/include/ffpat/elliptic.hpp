#pragma once

#include <cstddef>
#include <optional>

#include "ffpat/field.hpp"
#include "ffpat/grid.hpp"

namespace ffpat {

struct DirichletSolveOptions {
  /// Stop once ||r|| <= tol * ||b|| for the interior system A h = b.
  double tol = 1e-10;
  /// Iteration cap; 10 * N^2 when unset.
  std::optional<std::size_t> max_iter;
};

/// Discrete harmonic extension of exterior data into I.
///
/// The result equals g on J.  On I it solves the five-point Laplace equation
/// h(i+e1) + h(i-e1) + h(i+e2) + h(i-e2) - 4 h(i) = 0 with Dirichlet values
/// taken from g on the discrete boundary.  Values of g on I are ignored.
ScalarField harmonic_extension(const ScalarField& g, const DiscreteDomain& dom,
                               const DirichletSolveOptions& opts = {});

/// Projection onto the discrete H^1_0(I): u - h on I, where h is the harmonic
/// extension of u's values on the discrete boundary; zero on J.
ScalarField project_h10(const ScalarField& u, const DiscreteDomain& dom,
                        const DirichletSolveOptions& opts = {});

}  // namespace ffpat

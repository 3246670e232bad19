#pragma once

#include <cstddef>
#include <span>

#include "ffpat/field.hpp"
#include "ffpat/grid.hpp"

namespace ffpat {

/// Discrete gradient inner product over a region.
///
/// Sums (du)(dv) over every grid edge (i, i + e_d) with at least one endpoint
/// in the region, using the stored values at both endpoints.  Edges leaving
/// the box are skipped.  The h^2 quadrature weight and the 1/h^2 of the
/// forward differences cancel in two dimensions.
double h10_inner(const ScalarField& u, const ScalarField& v, std::span<const std::size_t> region);

/// sqrt(h10_inner(f, f, region)).  Throws on an empty region.
double h10_norm(const ScalarField& f, std::span<const std::size_t> region);

/// Seminorm sqrt(h^2 sum |grad f|^2) over the whole grid with spectral
/// gradients.
double spectral_h10_norm(const ScalarField& f);

/// sqrt(h^2 sum_{i in region} f_i^2)
double l2_norm(const ScalarField& f, std::span<const std::size_t> region);

struct ErrorReport {
  double l2_rel = 0.0;
  double h10_rel = 0.0;
  double max_abs = 0.0;
  /// f_true - f_rec on I, zero elsewhere.
  ScalarField pointwise;
};

/// Relative errors of a reconstruction on I.  When f_true vanishes on I the
/// relative errors are 0 for an identical reconstruction and infinite
/// otherwise.
ErrorReport compare(const ScalarField& f_rec, const ScalarField& f_true, const DiscreteDomain& dom);

}  // namespace ffpat

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ffpat/grid.hpp"

namespace ffpat {

/// Real function sampled on every point of a grid.
///
/// Functions that conceptually live on I or on J are stored on the full grid
/// with zeros elsewhere; see restrict_to().
class ScalarField {
 public:
  explicit ScalarField(const Grid& grid);
  ScalarField(const Grid& grid, std::vector<double> values);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  double& operator[](std::size_t flat) noexcept { return values_[flat]; }
  double operator[](std::size_t flat) const noexcept { return values_[flat]; }
  double& operator()(std::size_t i1, std::size_t i2) noexcept { return values_[i1 * grid_.size() + i2]; }
  double operator()(std::size_t i1, std::size_t i2) const noexcept {
    return values_[i1 * grid_.size() + i2];
  }

  bool all_finite() const noexcept;
  double max_abs() const noexcept;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s) noexcept;
  /// this += s * other
  ScalarField& axpy(double s, const ScalarField& other);

  friend ScalarField operator+(ScalarField lhs, const ScalarField& rhs) { return lhs += rhs; }
  friend ScalarField operator-(ScalarField lhs, const ScalarField& rhs) { return lhs -= rhs; }
  friend ScalarField operator*(double s, ScalarField f) { return f *= s; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Throws InvalidArgument when the two fields live on different grids.
void require_same_grid(const ScalarField& a, const ScalarField& b);

/// Throws InvalidArgument when f contains NaN or infinity.
void require_finite(const ScalarField& f, const char* what);

/// Copy of f with every value outside `indices` set to zero.
ScalarField restrict_to(const ScalarField& f, std::span<const std::size_t> indices);

}  // namespace ffpat

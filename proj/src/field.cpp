#include "ffpat/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ffpat/errors.hpp"

namespace ffpat {

ScalarField::ScalarField(const Grid& grid) : grid_(grid), values_(grid.count(), 0.0) {}

ScalarField::ScalarField(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.count()) {
    throw InvalidArgument("field has " + std::to_string(values_.size()) + " values, grid needs " +
                          std::to_string(grid_.count()));
  }
}

bool ScalarField::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double ScalarField::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) noexcept {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField& ScalarField::axpy(double s, const ScalarField& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += s * other.values_[k];
  return *this;
}

void require_same_grid(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid() == b.grid())) {
    throw InvalidArgument("fields live on different grids");
  }
}

void require_finite(const ScalarField& f, const char* what) {
  if (!f.all_finite()) {
    throw InvalidArgument(std::string(what) + " contains non-finite values");
  }
}

ScalarField restrict_to(const ScalarField& f, std::span<const std::size_t> indices) {
  ScalarField out(f.grid());
  for (std::size_t k : indices) out[k] = f[k];
  return out;
}

}  // namespace ffpat

#include "ffpat/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ffpat/errors.hpp"

namespace ffpat {

Grid::Grid(double half_width, std::size_t n)
    : a_(half_width), n_(n), h_(2.0 * half_width / static_cast<double>(n)) {}

std::int64_t Grid::frequency_index(std::size_t j) const noexcept {
  const auto sj = static_cast<std::int64_t>(j);
  const auto sn = static_cast<std::int64_t>(n_);
  return sj < sn / 2 ? sj : sj - sn;
}

double Grid::wavenumber(std::size_t j) const noexcept {
  return std::numbers::pi * static_cast<double>(frequency_index(j)) / a_;
}

std::vector<double> Grid::wavevectors() const {
  std::vector<double> k(n_);
  const auto half = static_cast<std::int64_t>(n_ / 2);
  for (std::size_t j = 0; j < n_; ++j) {
    const auto m = static_cast<std::int64_t>(j) - half;
    k[j] = std::numbers::pi * static_cast<double>(m) / a_;
  }
  return k;
}

Grid make_grid(double half_width, std::size_t n) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InvalidArgument("grid half-width must be positive and finite, got " +
                          std::to_string(half_width));
  }
  if (n < 8 || n % 2 != 0) {
    throw InvalidArgument("grid size must be an even integer >= 8, got " + std::to_string(n));
  }
  return Grid(half_width, n);
}

DiscreteDomain::DiscreteDomain(const Grid& grid, std::vector<Label> labels)
    : grid_(grid), labels_(std::move(labels)) {
  if (labels_.size() != grid_.count()) {
    throw InvalidArgument("domain label array does not match the grid");
  }
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == Label::inside) {
      inside_.push_back(k);
    } else {
      exterior_.push_back(k);
      if (labels_[k] == Label::boundary) boundary_.push_back(k);
    }
  }
}

DiscreteDomain discretize_domain(const Grid& grid, const DomainShape& shape, MarginCheck margin_check) {
  const double a = grid.half_width();
  const double h = grid.spacing();
  if (!(shape.radius > 0.0)) {
    throw InvalidArgument("domain radius must be positive");
  }
  const double margin = 2.0 * h;
  for (double c : shape.center) {
    if (margin_check == MarginCheck::skip) break;
    if (c - shape.radius < -a + margin || c + shape.radius > a - margin) {
      throw InvalidArgument("domain disc must stay two grid spacings inside the box");
    }
  }

  const std::size_t n = grid.size();
  using Label = DiscreteDomain::Label;
  std::vector<Label> labels(grid.count(), Label::exterior);
  bool any_inside = false;
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const Point2 x = grid.point(Index2{i1, i2});
      const double dx = x[0] - shape.center[0];
      const double dy = x[1] - shape.center[1];
      if (std::hypot(dx, dy) < shape.radius) {
        labels[grid.flatten({i1, i2})] = Label::inside;
        any_inside = true;
      }
    }
  }
  if (!any_inside) {
    throw InvalidArgument("domain contains no grid point; refine the grid or enlarge the disc");
  }

  auto mark = [&](std::size_t i1, std::size_t i2) {
    auto& label = labels[grid.flatten({i1, i2})];
    if (label == Label::exterior) label = Label::boundary;
  };
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      if (labels[grid.flatten({i1, i2})] != Label::inside) continue;
      if (i1 > 0) mark(i1 - 1, i2);
      if (i1 + 1 < n) mark(i1 + 1, i2);
      if (i2 > 0) mark(i1, i2 - 1);
      if (i2 + 1 < n) mark(i1, i2 + 1);
    }
  }
  return DiscreteDomain(grid, std::move(labels));
}

}  // namespace ffpat

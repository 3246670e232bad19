#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ffpat {

using Index2 = std::array<std::size_t, 2>;
using Point2 = std::array<double, 2>;

/// Square sampling of the periodic box [-a, a)^2 with N points per axis.
///
/// Grid point i = (i1, i2) sits at x_i = (-a, -a) + i * 2a / N. Storage of
/// every field on the grid is row-major with i2 fastest, so the flat index of
/// (i1, i2) is i1 * N + i2.
class Grid {
 public:
  Grid(double half_width, std::size_t n);

  double half_width() const noexcept { return a_; }
  std::size_t size() const noexcept { return n_; }
  std::size_t count() const noexcept { return n_ * n_; }
  double spacing() const noexcept { return h_; }

  double coordinate(std::size_t i) const noexcept { return -a_ + static_cast<double>(i) * h_; }
  Point2 point(Index2 i) const noexcept { return {coordinate(i[0]), coordinate(i[1])}; }
  Point2 point(std::size_t flat) const noexcept { return point(unflatten(flat)); }

  std::size_t flatten(Index2 i) const noexcept { return i[0] * n_ + i[1]; }
  Index2 unflatten(std::size_t flat) const noexcept { return {flat / n_, flat % n_}; }

  /// Signed frequency index of FFT bin j: j for j < N/2, j - N otherwise.
  std::int64_t frequency_index(std::size_t j) const noexcept;
  /// Angular wavenumber pi * m / a of FFT bin j.
  double wavenumber(std::size_t j) const noexcept;
  /// Wavenumbers for m = -N/2, ..., N/2 - 1 in increasing order.
  std::vector<double> wavevectors() const;

  friend bool operator==(const Grid& lhs, const Grid& rhs) noexcept {
    return lhs.n_ == rhs.n_ && lhs.a_ == rhs.a_;
  }

 private:
  double a_;
  std::size_t n_;
  double h_;
};

/// Validates the arguments and builds a grid.  Requires N even, N >= 8, a > 0.
Grid make_grid(double half_width, std::size_t n);

/// Box half-width used when none is given: observation time plus 1.25.
inline constexpr double kDefaultBoxMargin = 1.25;
inline double default_half_width(double final_time) { return final_time + kDefaultBoxMargin; }

struct DomainShape {
  Point2 center{0.0, 0.0};
  double radius = 1.0;

  static DomainShape unit_disc() { return {}; }
};

/// Discrete imaging domain: the interior set I, its complement J and the
/// discrete boundary (points of J with a 4-neighbour in I).  All index lists
/// hold flat indices in increasing order.
class DiscreteDomain {
 public:
  enum class Label : std::uint8_t { exterior = 0, boundary = 1, inside = 2 };

  DiscreteDomain(const Grid& grid, std::vector<Label> labels);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const std::size_t> inside() const noexcept { return inside_; }
  std::span<const std::size_t> exterior() const noexcept { return exterior_; }
  std::span<const std::size_t> boundary() const noexcept { return boundary_; }
  std::span<const Label> labels() const noexcept { return labels_; }

  bool is_inside(std::size_t flat) const noexcept { return labels_[flat] == Label::inside; }
  bool is_boundary(std::size_t flat) const noexcept { return labels_[flat] == Label::boundary; }
  bool is_exterior(std::size_t flat) const noexcept { return labels_[flat] != Label::inside; }

 private:
  Grid grid_;
  std::vector<Label> labels_;
  std::vector<std::size_t> inside_;
  std::vector<std::size_t> exterior_;
  std::vector<std::size_t> boundary_;
};

enum class MarginCheck { enforce, skip };

/// I = { i : |x_i - center| < radius }.  The disc must contain at least one
/// grid point and, unless the check is skipped, keep a margin of two grid
/// spacings from the box faces.
DiscreteDomain discretize_domain(const Grid& grid, const DomainShape& shape,
                                 MarginCheck margin = MarginCheck::enforce);

}  // namespace ffpat

// Independent reference computations for the test suite.  Nothing here calls
// into the library's solvers; only Grid/ScalarField are shared for storage.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <vector>

#include "ffpat/field.hpp"
#include "ffpat/grid.hpp"

namespace oracle {

using ffpat::Grid;
using ffpat::ScalarField;

// Second-order leapfrog with the 5-point Laplacian on the periodic box.
// p^1 = p^0 + dt^2/2 c^2 L p^0 for zero initial velocity.
inline std::vector<double> fd_wave(const std::vector<double>& f0, std::size_t n, double h, double c,
                                   double final_time, double courant = 0.25) {
  const auto steps = static_cast<std::size_t>(std::ceil(final_time / (courant * h / c)));
  const double dt = final_time / static_cast<double>(steps);
  const double r = c * c * dt * dt / (h * h);
  auto lap = [&](const std::vector<double>& u, std::size_t i, std::size_t j) {
    const std::size_t ip = (i + 1) % n, im = (i + n - 1) % n;
    const std::size_t jp = (j + 1) % n, jm = (j + n - 1) % n;
    return u[ip * n + j] + u[im * n + j] + u[i * n + jp] + u[i * n + jm] - 4.0 * u[i * n + j];
  };
  std::vector<double> prev = f0, cur(f0.size()), next(f0.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = prev[i * n + j] + 0.5 * r * lap(prev, i, j);
  for (std::size_t s = 1; s < steps; ++s) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        next[i * n + j] = 2.0 * cur[i * n + j] - prev[i * n + j] + r * lap(cur, i, j);
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return cur;
}

// cos(|k| t) cos(k . x) for the grid wavevector with integer indices (m1, m2).
inline ScalarField cosine_mode(const Grid& grid, int m1, int m2, double t) {
  const double k1 = M_PI * m1 / grid.half_width();
  const double k2 = M_PI * m2 / grid.half_width();
  const double amp = std::cos(std::hypot(k1, k2) * t);
  ScalarField u(grid);
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto x = grid.point(k);
    u[k] = amp * std::cos(k1 * x[0] + k2 * x[1]);
  }
  return u;
}

// Max |five-point defect| over points whose disc test |x - c| < r holds.
inline double stencil_residual(const ScalarField& u, double cx, double cy, double radius) {
  const Grid& g = u.grid();
  const std::size_t n = g.size();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i)
    for (std::size_t j = 1; j + 1 < n; ++j) {
      if (std::hypot(g.coordinate(i) - cx, g.coordinate(j) - cy) >= radius) continue;
      const double d = u(i + 1, j) + u(i - 1, j) + u(i, j + 1) + u(i, j - 1) - 4.0 * u(i, j);
      worst = std::max(worst, std::abs(d));
    }
  return worst;
}

// Boundary set re-derived from scratch: exterior points with an interior
// 4-neighbour inside the box.
inline std::set<std::size_t> brute_boundary(const Grid& g, double cx, double cy, double radius) {
  const std::size_t n = g.size();
  auto in = [&](long i, long j) {
    if (i < 0 || j < 0 || i >= static_cast<long>(n) || j >= static_cast<long>(n)) return false;
    return std::hypot(g.coordinate(static_cast<std::size_t>(i)) - cx,
                      g.coordinate(static_cast<std::size_t>(j)) - cy) < radius;
  };
  std::set<std::size_t> out;
  for (long i = 0; i < static_cast<long>(n); ++i)
    for (long j = 0; j < static_cast<long>(n); ++j)
      if (!in(i, j) && (in(i + 1, j) || in(i - 1, j) || in(i, j + 1) || in(i, j - 1)))
        out.insert(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j));
  return out;
}

inline double rel_l2(const ScalarField& a, const ScalarField& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    num += (a[k] - b[k]) * (a[k] - b[k]);
    den += b[k] * b[k];
  }
  return std::sqrt(num / den);
}

}  // namespace oracle

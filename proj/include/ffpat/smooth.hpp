#pragma once

#include <cmath>

namespace ffpat {

/// C-infinity step: 1 for r <= inner, 0 for r >= outer, monotone in between.
inline double smooth_cutoff(double r, double inner, double outer) {
  if (r <= inner) return 1.0;
  if (r >= outer) return 0.0;
  auto psi = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double t = (r - inner) / (outer - inner);
  const double up = psi(1.0 - t);
  return up / (up + psi(t));
}

}  // namespace ffpat

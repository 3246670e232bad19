#include "ffpat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ffpat/errors.hpp"
#include "ffpat/wave.hpp"

namespace ffpat {

double h10_inner(const ScalarField& u, const ScalarField& v, std::span<const std::size_t> region) {
  require_same_grid(u, v);
  if (region.empty()) throw InvalidArgument("H1_0 norm over an empty region");
  const Grid& grid = u.grid();
  const std::size_t n = grid.size();
  std::vector<bool> member(grid.count(), false);
  for (std::size_t k : region) member[k] = true;

  auto edge = [&](std::size_t p, std::size_t q) { return (u[q] - u[p]) * (v[q] - v[p]); };
  double sum = 0.0;
  for (std::size_t k : region) {
    const Index2 i = grid.unflatten(k);
    // Forward edges are owned by their lower endpoint; backward edges only
    // when the lower endpoint is outside the region.
    if (i[0] + 1 < n) sum += edge(k, k + n);
    if (i[1] + 1 < n) sum += edge(k, k + 1);
    if (i[0] > 0 && !member[k - n]) sum += edge(k - n, k);
    if (i[1] > 0 && !member[k - 1]) sum += edge(k - 1, k);
  }
  return sum;
}

double h10_norm(const ScalarField& f, std::span<const std::size_t> region) {
  return std::sqrt(std::max(0.0, h10_inner(f, f, region)));
}

double spectral_h10_norm(const ScalarField& f) {
  const auto grad = spectral_gradient(f);
  double sum = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += grad[0][k] * grad[0][k] + grad[1][k] * grad[1][k];
  const double h = f.grid().spacing();
  return std::sqrt(h * h * sum);
}

double l2_norm(const ScalarField& f, std::span<const std::size_t> region) {
  double sum = 0.0;
  for (std::size_t k : region) sum += f[k] * f[k];
  const double h = f.grid().spacing();
  return std::sqrt(h * h * sum);
}

namespace {
double relative(double err, double ref) {
  if (ref > 0.0) return err / ref;
  return err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}
}  // namespace

ErrorReport compare(const ScalarField& f_rec, const ScalarField& f_true, const DiscreteDomain& dom) {
  require_same_grid(f_rec, f_true);
  if (!(f_rec.grid() == dom.grid())) throw InvalidArgument("fields and domain grids differ");
  ErrorReport report{0.0, 0.0, 0.0, ScalarField(f_rec.grid())};
  ScalarField truth_on_i(f_true.grid());
  for (std::size_t k : dom.inside()) {
    report.pointwise[k] = f_true[k] - f_rec[k];
    truth_on_i[k] = f_true[k];
    report.max_abs = std::max(report.max_abs, std::abs(report.pointwise[k]));
  }
  report.l2_rel = relative(l2_norm(report.pointwise, dom.inside()), l2_norm(truth_on_i, dom.inside()));
  report.h10_rel =
      relative(h10_norm(report.pointwise, dom.inside()), h10_norm(truth_on_i, dom.inside()));
  return report;
}

}  // namespace ffpat

#include "ffpat/elliptic.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ffpat/errors.hpp"

namespace ffpat {

namespace {

// Interior operator A = 4 I - (adjacency restricted to I), symmetric positive
// definite.  `slot` maps a flat grid index to its unknown, or npos for J.
class InteriorLaplacian {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit InteriorLaplacian(const DiscreteDomain& dom) : dom_(dom), slot_(dom.grid().count(), npos) {
    const auto inside = dom.inside();
    for (std::size_t u = 0; u < inside.size(); ++u) slot_[inside[u]] = u;
    const std::size_t n = dom.grid().size();
    neighbours_.reserve(4 * inside.size());
    for (std::size_t k : inside) {
      const Index2 i = dom.grid().unflatten(k);
      // Interior points are never on the box faces: each has a boundary
      // point or another interior point on all four sides.
      if (i[0] == 0 || i[1] == 0 || i[0] + 1 == n || i[1] + 1 == n) {
        throw InvalidArgument("imaging domain touches the box faces");
      }
      for (std::size_t nb : {k - n, k + n, k - 1, k + 1}) neighbours_.push_back(nb);
    }
  }

  std::size_t unknowns() const noexcept { return dom_.inside().size(); }

  /// Right-hand side: sum of Dirichlet values over neighbours in J.
  std::vector<double> rhs(const ScalarField& g) const {
    std::vector<double> b(unknowns(), 0.0);
    for (std::size_t u = 0; u < b.size(); ++u) {
      for (std::size_t s = 0; s < 4; ++s) {
        const std::size_t nb = neighbours_[4 * u + s];
        if (slot_[nb] == npos) b[u] += g[nb];
      }
    }
    return b;
  }

  void apply(const std::vector<double>& x, std::vector<double>& y) const {
    for (std::size_t u = 0; u < x.size(); ++u) {
      double acc = 4.0 * x[u];
      for (std::size_t s = 0; s < 4; ++s) {
        const std::size_t v = slot_[neighbours_[4 * u + s]];
        if (v != npos) acc -= x[v];
      }
      y[u] = acc;
    }
  }

 private:
  const DiscreteDomain& dom_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> neighbours_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Conjugate gradient from x = 0.  The diagonal of A is constant, so Jacobi
// scaling would not change the iterates.
std::vector<double> solve_cg(const InteriorLaplacian& op, const std::vector<double>& b,
                             const DirichletSolveOptions& opts, std::size_t max_iter) {
  std::vector<double> x(b.size(), 0.0);
  const double b_norm = std::sqrt(dot(b, b));
  if (b_norm == 0.0) return x;

  std::vector<double> r = b;
  std::vector<double> p = r;
  std::vector<double> ap(b.size());
  double rr = dot(r, r);
  const double target = opts.tol * b_norm;
  for (std::size_t it = 0; it < max_iter; ++it) {
    if (std::sqrt(rr) <= target) return x;
    op.apply(p, ap);
    const double alpha = rr / dot(p, ap);
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] += alpha * p[k];
      r[k] -= alpha * ap[k];
    }
    const double rr_new = dot(r, r);
    if (!std::isfinite(rr_new)) {
      throw ConvergenceError("conjugate gradient produced a non-finite residual", it + 1, rr_new);
    }
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = r[k] + beta * p[k];
  }
  if (std::sqrt(rr) <= target) return x;
  throw ConvergenceError("conjugate gradient did not converge in " + std::to_string(max_iter) +
                             " iterations (relative residual " +
                             std::to_string(std::sqrt(rr) / b_norm) + ")",
                         max_iter, std::sqrt(rr) / b_norm);
}

void check(const ScalarField& f, const DiscreteDomain& dom, const DirichletSolveOptions& opts) {
  if (!(f.grid() == dom.grid())) throw InvalidArgument("field and domain grids differ");
  if (!(opts.tol > 0.0)) throw InvalidArgument("Dirichlet solve tolerance must be positive");
  if (dom.inside().empty()) throw InvalidArgument("imaging domain is empty");
}

}  // namespace

ScalarField harmonic_extension(const ScalarField& g, const DiscreteDomain& dom,
                               const DirichletSolveOptions& opts) {
  check(g, dom, opts);
  for (std::size_t k : dom.exterior()) {
    if (!std::isfinite(g[k])) throw InvalidArgument("exterior data contains non-finite values");
  }
  const InteriorLaplacian op(dom);
  const std::size_t cap = opts.max_iter.value_or(10 * dom.grid().count());
  const std::vector<double> x = solve_cg(op, op.rhs(g), opts, cap);

  ScalarField out = g;
  const auto inside = dom.inside();
  for (std::size_t u = 0; u < inside.size(); ++u) out[inside[u]] = x[u];
  return out;
}

ScalarField project_h10(const ScalarField& u, const DiscreteDomain& dom,
                        const DirichletSolveOptions& opts) {
  check(u, dom, opts);
  for (std::size_t k : dom.inside()) {
    if (!std::isfinite(u[k])) throw InvalidArgument("projection input contains non-finite values");
  }
  ScalarField trace(u.grid());
  for (std::size_t k : dom.boundary()) trace[k] = u[k];
  const ScalarField h = harmonic_extension(trace, dom, opts);

  ScalarField out(u.grid());
  for (std::size_t k : dom.inside()) out[k] = u[k] - h[k];
  return out;
}

}  // namespace ffpat

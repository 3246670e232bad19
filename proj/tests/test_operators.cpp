#include <doctest.h>

#include <cmath>
#include <random>

#include "ffpat/analysis.hpp"
#include "ffpat/errors.hpp"
#include "ffpat/operators.hpp"
#include "ffpat/phantoms.hpp"

using namespace ffpat;

namespace {

const PipelineConfig& pipe(const char* speed) {
  static const PipelineConfig c1 = make_unit_disc_pipeline(128, 2.0, Registry::builtin().speed("I"));
  static const PipelineConfig c3 = make_unit_disc_pipeline(128, 2.0, Registry::builtin().speed("III"));
  return std::string(speed) == "I" ? c1 : c3;
}

double max_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

ScalarField random_exterior(const PipelineConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  ScalarField g(cfg.grid);
  for (auto k : cfg.dom.exterior()) g[k] = nd(rng);
  return g;
}

}  // namespace

TEST_CASE("zero in, zero out") {
  const auto& cfg = pipe("I");
  const ScalarField zero(cfg.grid);
  CHECK(forward_exterior(zero, cfg).max_abs() == 0.0);
  CHECK(modified_time_reversal(zero, cfg).max_abs() == 0.0);
  CHECK(error_operator(zero, 0.5, cfg).max_abs() == 0.0);
}

TEST_CASE("most energy leaves the domain by T = 2") {
  const auto& cfg = pipe("I");
  ScalarField f(cfg.grid);
  for (auto k : cfg.dom.inside()) {
    const auto x = cfg.grid.point(k);
    f[k] = std::exp(-(x[0] * x[0] + x[1] * x[1]) / (0.15 * 0.15));
  }
  const auto snap = propagate(f, cfg.c, cfg.solver);
  const auto grad = spectral_gradient(snap.pressure);
  double inside = 0.0, total = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double e = snap.velocity[k] * snap.velocity[k] + grad[0][k] * grad[0][k] + grad[1][k] * grad[1][k];
    total += e;
    if (cfg.dom.is_inside(k)) inside += e;
  }
  CHECK(inside < 0.2 * total);

  const auto g = forward_exterior(f, cfg);
  for (auto k : cfg.dom.inside()) REQUIRE(g[k] == 0.0);
  for (auto k : cfg.dom.exterior()) REQUIRE(g[k] == snap.pressure[k]);
}

TEST_CASE("composed operators are linear") {
  const auto& cfg = pipe("III");
  const auto f = random_smooth_field(cfg, 3);
  const auto w1 = forward_exterior(2.0 * f, cfg);
  const auto w2 = 2.0 * forward_exterior(f, cfg);
  CHECK(max_diff(w1, w2) <= 1e-12 * w2.max_abs());

  const auto g = random_exterior(cfg, 1);
  const auto h = random_exterior(cfg, 2);
  const auto lhs = modified_time_reversal(g + (-0.5) * h, cfg);
  const auto rhs = modified_time_reversal(g, cfg) + (-0.5) * modified_time_reversal(h, cfg);
  CHECK(max_diff(lhs, rhs) <= 1e-9 * rhs.max_abs());
}

TEST_CASE("modified time reversal output vanishes off I") {
  const auto& cfg = pipe("III");
  const auto a = modified_time_reversal(random_exterior(cfg, 7), cfg);
  for (auto k : cfg.dom.exterior()) REQUIRE(a[k] == 0.0);
  CHECK(a.max_abs() > 0.0);
}

TEST_CASE("error operator identities") {
  const auto& cfg = pipe("III");
  const auto f = random_smooth_field(cfg, 11);
  const auto k1 = error_operator(f, 1.0, cfg);
  const auto k2 = error_operator(f, 2.0, cfg);

  const auto kh = error_operator(f, 0.5, cfg);
  CHECK(max_diff(kh, 0.5 * f + 0.5 * k1) <= 1e-12 * f.max_abs());

  const auto k15 = error_operator(f, 1.5, cfg);
  CHECK(max_diff(k15, 0.5 * k2 + 0.5 * k1) <= 1e-12 * f.max_abs());

  CHECK(h10_norm(k1, cfg.dom.inside()) < h10_norm(f, cfg.dom.inside()));
}

TEST_CASE("relaxation parameter domain") {
  const auto& cfg = pipe("I");
  const ScalarField f(cfg.grid);
  CHECK_THROWS_AS(error_operator(f, 0.0, cfg), InvalidArgument);
  CHECK_THROWS_AS(error_operator(f, 2.5, cfg), InvalidArgument);
  CHECK_THROWS_AS(error_operator(f, -1.0, cfg), InvalidArgument);
  CHECK_NOTHROW(error_operator(f, 2.0, cfg));
  CHECK_THROWS_AS(estimate_contraction(0.0, 3, 1, cfg), InvalidArgument);
  CHECK_THROWS_AS(estimate_contraction(0.5, 0, 1, cfg), InvalidArgument);
}

TEST_CASE("random test fields are smooth and vanish near the boundary") {
  const auto& cfg = pipe("I");
  const auto f = random_smooth_field(cfg, 5);
  CHECK(f.max_abs() > 0.0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto x = cfg.grid.point(k);
    if (std::hypot(x[0], x[1]) >= 0.7) REQUIRE(f[k] == 0.0);
  }
  const auto again = random_smooth_field(cfg, 5);
  for (std::size_t k = 0; k < f.size(); ++k) REQUIRE(f[k] == again[k]);
}

TEST_CASE("contraction estimate at constant speed") {
  const auto& cfg = pipe("I");
  const auto est = estimate_contraction(0.5, 20, 42, cfg);
  REQUIRE(est.ratios.size() == 20);
  CHECK(est.max_ratio < 1.0);
  CHECK(est.max_ratio == *std::max_element(est.ratios.begin(), est.ratios.end()));

  const auto again = estimate_contraction(0.5, 20, 42, cfg);
  CHECK(again.ratios == est.ratios);

  const double lams[] = {0.5, 2.0};
  const auto both = estimate_contraction(lams, 20, 42, cfg);
  REQUIRE(both.size() == 2);
  for (std::size_t t = 0; t < 20; ++t) CHECK(both[0].ratios[t] == doctest::Approx(est.ratios[t]).epsilon(1e-12));
  CHECK(both[1].max_ratio < 1.0);
}

TEST_CASE("pipeline requires unit speed outside the domain") {
  const Grid g = make_grid(3.25, 64);
  const auto dom = discretize_domain(g, DomainShape::unit_disc());
  CHECK_THROWS_AS(make_pipeline(g, DomainShape::unit_disc(), dom, SoundSpeed::constant(g, 1.1), 2.0),
                  InvalidArgument);
  CHECK_NOTHROW(make_pipeline(g, DomainShape::unit_disc(), dom, SoundSpeed::constant(g), 2.0));
}

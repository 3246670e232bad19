#include <doctest.h>

#include <cmath>
#include <fstream>
#include <string>

#include "ffpat/errors.hpp"
#include "ffpat/phantoms.hpp"
#include "oracles.hpp"

using namespace ffpat;

namespace {

const Registry& reg() { return Registry::builtin(); }

double max_five_point_laplacian(std::size_t n) {
  const Grid g = make_grid(3.25, n);
  const auto dom = discretize_domain(g, DomainShape::unit_disc());
  const auto f = make_phantom(reg().phantom("a"), g, dom);
  const double h2 = g.spacing() * g.spacing();
  double m = 0.0;
  for (auto k : dom.inside()) {
    const auto [i, j] = g.unflatten(k);
    m = std::max(m, std::abs(f(i + 1, j) + f(i - 1, j) + f(i, j + 1) + f(i, j - 1) - 4.0 * f(i, j)) / h2);
  }
  return m;
}

}  // namespace

TEST_CASE("builtin registry contents") {
  CHECK(reg().version() == 1);
  for (const char* p : {"a", "b", "c"}) CHECK_NOTHROW(reg().phantom(p));
  for (const char* s : {"I", "II", "III", "IV"}) CHECK_NOTHROW(reg().speed(s));
  CHECK(reg().phantom("a").smooth());
  CHECK_FALSE(reg().phantom("b").smooth());
  CHECK_THROWS_AS(reg().phantom("d"), InvalidArgument);
  CHECK_THROWS_AS(reg().speed("V"), InvalidArgument);
}

TEST_CASE("sound speeds") {
  const Grid g = make_grid(3.25, 128);
  const auto dom = discretize_domain(g, DomainShape::unit_disc());
  const auto c1 = make_speed(reg().speed("I"), g, dom);
  CHECK(c1.max() == 1.0);
  CHECK(c1.min() == 1.0);

  for (const char* s : {"I", "II", "III", "IV"}) {
    const auto c = make_speed(reg().speed(s), g, dom);
    for (auto k : dom.exterior()) REQUIRE(c.field()[k] == 1.0);
    CHECK(c.min() >= 0.5);
    CHECK(c.max() <= 1.3);
  }

  const auto c2 = make_speed(reg().speed("II"), g, dom);
  CHECK(c2.max() > 1.0);
  const auto c3 = make_speed(reg().speed("III"), g, dom);
  CHECK(c3.max() > 1.0);
  CHECK(c3.min() < 1.0);

  const auto c4 = make_speed(reg().speed("IV"), g, dom);
  CHECK(c4.min() == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(c4.field()(64, 64) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(c4.field()(64, 64 + 8) == doctest::Approx(1.0 - 0.4 * std::exp(-std::pow(8 * g.spacing(), 2) / 0.04)));
}

TEST_CASE("phantoms") {
  const Grid g = make_grid(3.25, 128);
  const auto dom = discretize_domain(g, DomainShape::unit_disc());
  for (const char* p : {"a", "b", "c"}) {
    const auto f = make_phantom(reg().phantom(p), g, dom);
    for (auto k : dom.exterior()) REQUIRE(f[k] == 0.0);
    for (auto v : f.values()) {
      REQUIRE(v >= 0.0);
      REQUIRE(v <= 1.0);
    }
    for (std::size_t k = 0; k < f.size(); ++k) {
      const auto x = g.point(k);
      if (std::hypot(x[0], x[1]) > 1.0 - kSupportMargin) REQUIRE(f[k] == 0.0);
    }
  }
  const auto fb = make_phantom(reg().phantom("b"), g, dom);
  CHECK(fb.max_abs() == 1.0);
}

TEST_CASE("smooth phantom has a resolution-independent Laplacian") {
  const double coarse = max_five_point_laplacian(128);
  const double fine = max_five_point_laplacian(256);
  CHECK(fine <= 2.0 * coarse);
  CHECK(coarse <= 2.0 * fine);
}

TEST_CASE("registry parsing") {
  const auto r = Registry::parse(
      "# comment\n"
      "registry.version = 3\n"
      "\n"
      "phantom.x.disc = 0 0 0.5 1   # trailing comment\n"
      "speed.y.cutoff = 0.5 0.9\n"
      "speed.y.bump = 0 0 0.2 0.1\n"
      "speed.y.bump = 0.1 0 -0.3 0.1\n");
  CHECK(r.version() == 3);
  CHECK(r.phantom("x").discs.size() == 1);
  CHECK(r.speed("y").bumps.size() == 2);
  CHECK(r.speed("y").cutoff.inner == 0.5);

  CHECK_THROWS_AS(Registry::parse("phantom.x.disc 0 0 1 1\n"), InvalidArgument);
  CHECK_THROWS_AS(Registry::parse("phantom.x.disc = 0 0 1\n"), InvalidArgument);
  CHECK_THROWS_AS(Registry::parse("phantom.x.blob = 0 0 1 1\n"), InvalidArgument);
  CHECK_THROWS_AS(Registry::parse("thing.x.disc = 0 0 0.2 1\n"), InvalidArgument);
  CHECK_THROWS_AS(Registry::parse("phantom.x.disc = 0.5 0 0.5 1\n"), InvalidArgument);
  CHECK_THROWS_AS(Registry::parse("speed.y.bump = 0 0 -0.3 0.1\nspeed.y.bump = 0.2 0 -0.3 0.1\n"),
                  InvalidArgument);
  CHECK_THROWS_AS(Registry::load("/nonexistent/registry.txt"), IoError);
}

TEST_CASE("registry files load like text") {
  const std::string path = "test_registry.txt";
  {
    std::ofstream out(path);
    out << "registry.version = 2\nphantom.q.annulus = 0 0 0.2 0.4 0.5\n";
  }
  const auto r = Registry::load(path);
  CHECK(r.version() == 2);
  CHECK(r.phantom("q").annuli.at(0).outer == 0.4);
}

TEST_CASE("simulated data") {
  const auto cfg = make_unit_disc_pipeline(64, 2.0, reg().speed("I"));
  const auto& pa = reg().phantom("a");
  const auto f = make_phantom(pa, cfg.grid, cfg.dom);
  const auto direct = forward_exterior(f, cfg);
  const auto same = simulate_data(pa, reg().speed("I"), cfg, 1);
  for (std::size_t k = 0; k < f.size(); ++k) REQUIRE(same[k] == direct[k]);

  const auto fine = simulate_data(pa, reg().speed("I"), cfg, 3);
  for (auto k : cfg.dom.inside()) REQUIRE(fine[k] == 0.0);
  CHECK(oracle::rel_l2(fine, direct) < 0.05);
  CHECK(oracle::rel_l2(fine, direct) > 0.0);

  auto doubled = pa;
  for (auto& b : doubled.bumps) b.amplitude *= 2.0;
  const auto twice = simulate_data(doubled, reg().speed("I"), cfg, 3);
  CHECK(oracle::rel_l2(twice, 2.0 * fine) < 1e-12);

  auto empty = pa;
  for (auto& b : empty.bumps) b.amplitude = 0.0;
  CHECK(simulate_data(empty, reg().speed("I"), cfg, 3).max_abs() == 0.0);

  CHECK_THROWS_AS(simulate_data(pa, reg().speed("I"), cfg, 2), InvalidArgument);
  CHECK_THROWS_AS(simulate_data(pa, reg().speed("I"), cfg, 0), InvalidArgument);
}

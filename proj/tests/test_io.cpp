#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "ffpat/errors.hpp"
#include "ffpat/io.hpp"

using namespace ffpat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
}

ScalarField random_field(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1e3);
  ScalarField f(g);
  for (auto& v : f.values()) v = nd(rng);
  return f;
}

// P5 payload after the three header lines.
std::vector<unsigned char> pgm_pixels(const std::string& path, std::size_t n) {
  const std::string bytes = slurp(path);
  REQUIRE(bytes.size() >= n * n);
  const std::string tail = bytes.substr(bytes.size() - n * n);
  return {tail.begin(), tail.end()};
}

}  // namespace

TEST_CASE("field files round-trip bit for bit") {
  const Grid g = make_grid(3.1415926535897931, 16);
  const auto f = random_field(g, 1);
  write_field(f, "rt.ff", "Pa");
  const auto back = read_field_file("rt.ff");
  CHECK(back.units == "Pa");
  CHECK(back.field.grid() == g);
  for (std::size_t k = 0; k < f.size(); ++k) REQUIRE(back.field[k] == f[k]);

  const std::string bytes = slurp("rt.ff");
  CHECK(bytes.rfind("FF2D 16 3.1415926535897931 Pa\n", 0) == 0);
  CHECK(bytes.size() == std::string("FF2D 16 3.1415926535897931 Pa\n").size() + 8 * 256);
}

TEST_CASE("damaged field files are rejected") {
  const Grid g = make_grid(2.0, 8);
  write_field(random_field(g, 2), "good.ff");
  const std::string bytes = slurp("good.ff");

  spit("short.ff", bytes.substr(0, bytes.size() - 3));
  try {
    read_field("short.ff");
    FAIL("truncated file accepted");
  } catch (const IoError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("512") != std::string::npos);
    CHECK(msg.find("509") != std::string::npos);
  }

  spit("long.ff", bytes + "x");
  CHECK_THROWS_AS(read_field("long.ff"), IoError);

  std::string wrong_n = bytes;
  wrong_n.replace(0, 6, "FF2D 9");
  spit("wrongn.ff", wrong_n);
  CHECK_THROWS_AS(read_field("wrongn.ff"), IoError);

  spit("magic.ff", "FF3D 8 2 arb\n" + bytes.substr(bytes.find('\n') + 1));
  CHECK_THROWS_AS(read_field("magic.ff"), IoError);
  CHECK_THROWS_AS(read_field("no_such_file.ff"), IoError);
}

TEST_CASE("pgm export") {
  const Grid g = make_grid(2.0, 8);
  ScalarField flat(g);
  for (auto& v : flat.values()) v = 0.25;
  write_pgm(flat, "flat.pgm");
  CHECK(slurp("flat.pgm").rfind("P5\n8 8\n255\n", 0) == 0);
  for (auto p : pgm_pixels("flat.pgm", 8)) REQUIRE(p == 128);

  ScalarField f(g);
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = 0.01 * static_cast<double>(k % 7);
  f(2, 5) = 3.0;
  f(6, 1) = -3.0;
  write_pgm(f, "ext.pgm");
  const auto px = pgm_pixels("ext.pgm", 8);
  // Row r shows i2 = N - 1 - r, column c shows i1 = c.
  CHECK(px[(7 - 5) * 8 + 2] == 255);
  CHECK(px[(7 - 1) * 8 + 6] == 0);

  ScalarField wide(g);
  wide(0, 0) = -4.0;
  wide(1, 0) = 4.0;
  wide(2, 0) = 0.5;
  write_pgm(wide, "clip.pgm", ClipRange{0.0, 1.0});
  const auto cp = pgm_pixels("clip.pgm", 8);
  CHECK(cp[7 * 8 + 0] == 0);
  CHECK(cp[7 * 8 + 1] == 255);
  CHECK(cp[7 * 8 + 2] == 128);
}

TEST_CASE("convergence logs") {
  write_log({}, "empty.csv");
  CHECK(slurp("empty.csv") == "iter,residual_h10,error_h10\n");

  ConvergenceLog log;
  for (std::size_t j = 1; j <= 80; ++j) log.records.push_back({j, 1.0 / (3.0 * j), 0.1 * std::pow(0.7, j)});
  write_log(log, "full.csv");
  const std::string text = slurp("full.csv");
  CHECK(std::count(text.begin(), text.end(), '\n') == 81);
  const auto back = read_log("full.csv");
  REQUIRE(back.records.size() == 80);
  for (std::size_t j = 0; j < 80; ++j) {
    CHECK(back.records[j].iter == log.records[j].iter);
    CHECK(back.records[j].residual_h10 == log.records[j].residual_h10);
    CHECK(*back.records[j].error_h10 == *log.records[j].error_h10);
  }

  ConvergenceLog blind;
  blind.records.push_back({1, 0.5, std::nullopt});
  write_log(blind, "blind.csv");
  CHECK(slurp("blind.csv") == "iter,residual_h10,error_h10\n1,0.5,\n");
  CHECK_FALSE(read_log("blind.csv").records.at(0).error_h10.has_value());

  CHECK(format_exact(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_exact(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK_THROWS_AS(write_log(log, "/nonexistent/dir/x.csv"), IoError);
}

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ffpat/field.hpp"
#include "ffpat/grid.hpp"
#include "ffpat/operators.hpp"
#include "ffpat/wave.hpp"

namespace ffpat {

/// amplitude * exp(-|x - center|^2 / width^2)
struct GaussianBump {
  Point2 center{};
  double amplitude = 0.0;
  double width = 1.0;
};

struct DiscPiece {
  Point2 center{};
  double radius = 0.0;
  double value = 0.0;
};

struct AnnulusPiece {
  Point2 center{};
  double inner = 0.0;
  double outer = 0.0;
  double value = 0.0;
};

/// Radii of the smooth cutoff; 1 inside `inner`, 0 beyond `outer`.
struct Cutoff {
  double inner = 0.80;
  double outer = 0.95;
};

/// Initial pressure phantom.  Smooth phantoms are a cutoff sum of Gaussian
/// bumps; piecewise-constant ones are sums of disc and annulus indicators.
struct PhantomSpec {
  std::string name;
  Cutoff cutoff;
  std::vector<GaussianBump> bumps;
  std::vector<DiscPiece> discs;
  std::vector<AnnulusPiece> annuli;

  bool smooth() const noexcept { return discs.empty() && annuli.empty(); }
};

/// c = 1 + cutoff(|x|) * sum of bumps.
struct SpeedSpec {
  std::string name;
  Cutoff cutoff;
  std::vector<GaussianBump> bumps;
};

inline constexpr double kSupportMargin = 0.05;

/// Phantom and speed parameter sets parsed from the plain-text registry.
class Registry {
 public:
  /// The registry shipped with the library (data/registry.txt at build time).
  static const Registry& builtin();
  static Registry parse(const std::string& text);
  static Registry load(const std::string& path);

  const PhantomSpec& phantom(const std::string& name) const;
  const SpeedSpec& speed(const std::string& name) const;
  int version() const noexcept { return version_; }

 private:
  int version_ = 0;
  std::map<std::string, PhantomSpec> phantoms_;
  std::map<std::string, SpeedSpec> speeds_;
};

/// Throws InvalidArgument if the phantom support leaves the unit disc minus
/// the margin.
void validate(const PhantomSpec& spec);
/// Throws InvalidArgument for speeds dipping below 0.5 or reaching into the
/// exterior.
void validate(const SpeedSpec& spec);

/// Samples the phantom at grid points (midpoint rule, no anti-aliasing) and
/// zeroes it outside I.
ScalarField make_phantom(const PhantomSpec& spec, const Grid& grid, const DiscreteDomain& dom);

SoundSpeed make_speed(const SpeedSpec& spec, const Grid& grid, const DiscreteDomain& dom);

/// Grid, unit-disc domain, speed and solver bundled for one experiment
/// setting.  half_width <= 0 selects the default T + 1.25.
PipelineConfig make_unit_disc_pipeline(std::size_t n, double final_time, const SpeedSpec& speed,
                                       double half_width = 0.0, double cfl = kDefaultCfl,
                                       bool kspace_correction = true,
                                       DirichletSolveOptions elliptic = {});

/// Exterior data of the phantom, simulated on a grid `oversample` times finer
/// than cfg.grid and subsampled at the coincident coarse points of J.
/// oversample must be odd.
ScalarField simulate_data(const PhantomSpec& phantom, const SpeedSpec& speed,
                          const PipelineConfig& cfg, std::size_t oversample = 3);

}  // namespace ffpat

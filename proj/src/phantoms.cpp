#include "ffpat/phantoms.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ffpat/errors.hpp"
#include "ffpat/smooth.hpp"
#include "registry_text.hpp"

namespace ffpat {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> numbers(const std::string& value, std::size_t expected, const std::string& key,
                            std::size_t line) {
  std::istringstream in(value);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  if (!in.eof() || out.size() != expected) {
    throw InvalidArgument("registry line " + std::to_string(line) + ": '" + key + "' expects " +
                          std::to_string(expected) + " numbers");
  }
  return out;
}

double norm(const Point2& p) { return std::hypot(p[0], p[1]); }

double bump_sum(const std::vector<GaussianBump>& bumps, const Point2& x) {
  double sum = 0.0;
  for (const auto& b : bumps) {
    const double dx = x[0] - b.center[0];
    const double dy = x[1] - b.center[1];
    sum += b.amplitude * std::exp(-(dx * dx + dy * dy) / (b.width * b.width));
  }
  return sum;
}

double evaluate(const PhantomSpec& spec, const Point2& x) {
  double value = 0.0;
  if (!spec.bumps.empty()) {
    value += smooth_cutoff(norm(x), spec.cutoff.inner, spec.cutoff.outer) * bump_sum(spec.bumps, x);
  }
  for (const auto& d : spec.discs) {
    if (std::hypot(x[0] - d.center[0], x[1] - d.center[1]) < d.radius) value += d.value;
  }
  for (const auto& a : spec.annuli) {
    const double r = std::hypot(x[0] - a.center[0], x[1] - a.center[1]);
    if (r >= a.inner && r < a.outer) value += a.value;
  }
  return value;
}

void validate_cutoff(const Cutoff& c, const std::string& what) {
  if (!(c.inner > 0.0 && c.inner < c.outer && c.outer <= 1.0 - kSupportMargin)) {
    throw InvalidArgument(what + ": cutoff radii must satisfy 0 < inner < outer <= 0.95");
  }
}

}  // namespace

void validate(const PhantomSpec& spec) {
  const std::string what = "phantom '" + spec.name + "'";
  if (spec.bumps.empty() && spec.discs.empty() && spec.annuli.empty()) {
    throw InvalidArgument(what + " has no components");
  }
  if (!spec.bumps.empty()) validate_cutoff(spec.cutoff, what);
  const double limit = 1.0 - kSupportMargin;
  for (const auto& b : spec.bumps) {
    if (!(b.width > 0.0)) throw InvalidArgument(what + ": bump width must be positive");
  }
  for (const auto& d : spec.discs) {
    if (!(d.radius > 0.0) || norm(d.center) + d.radius > limit) {
      throw InvalidArgument(what + ": disc leaves the unit disc margin");
    }
  }
  for (const auto& a : spec.annuli) {
    if (!(a.inner >= 0.0 && a.inner < a.outer) || norm(a.center) + a.outer > limit) {
      throw InvalidArgument(what + ": annulus leaves the unit disc margin");
    }
  }
}

void validate(const SpeedSpec& spec) {
  const std::string what = "sound speed '" + spec.name + "'";
  validate_cutoff(spec.cutoff, what);
  double negative = 0.0;
  for (const auto& b : spec.bumps) {
    if (!(b.width > 0.0)) throw InvalidArgument(what + ": bump width must be positive");
    negative += std::min(0.0, b.amplitude);
  }
  // Worst case: every negative bump peaks at one point.
  if (1.0 + negative < 0.5) throw InvalidArgument(what + ": speed may drop below 0.5");
}

Registry Registry::parse(const std::string& text) {
  Registry reg;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("registry line " + std::to_string(line_no) + ": missing '='");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "registry.version") {
      reg.version_ = static_cast<int>(numbers(value, 1, key, line_no)[0]);
      continue;
    }
    const auto d1 = key.find('.');
    const auto d2 = key.find('.', d1 == std::string::npos ? d1 : d1 + 1);
    if (d1 == std::string::npos || d2 == std::string::npos) {
      throw InvalidArgument("registry line " + std::to_string(line_no) + ": malformed key '" + key + "'");
    }
    const std::string group = key.substr(0, d1);
    const std::string name = key.substr(d1 + 1, d2 - d1 - 1);
    const std::string field = key.substr(d2 + 1);

    auto bump = [&] {
      const auto v = numbers(value, 4, key, line_no);
      return GaussianBump{{v[0], v[1]}, v[2], v[3]};
    };
    auto cutoff = [&] {
      const auto v = numbers(value, 2, key, line_no);
      return Cutoff{v[0], v[1]};
    };

    if (group == "phantom") {
      PhantomSpec& spec = reg.phantoms_[name];
      spec.name = name;
      if (field == "cutoff") {
        spec.cutoff = cutoff();
      } else if (field == "bump") {
        spec.bumps.push_back(bump());
      } else if (field == "disc") {
        const auto v = numbers(value, 4, key, line_no);
        spec.discs.push_back({{v[0], v[1]}, v[2], v[3]});
      } else if (field == "annulus") {
        const auto v = numbers(value, 5, key, line_no);
        spec.annuli.push_back({{v[0], v[1]}, v[2], v[3], v[4]});
      } else {
        throw InvalidArgument("registry line " + std::to_string(line_no) + ": unknown field '" + field + "'");
      }
    } else if (group == "speed") {
      SpeedSpec& spec = reg.speeds_[name];
      spec.name = name;
      if (field == "cutoff") {
        spec.cutoff = cutoff();
      } else if (field == "bump") {
        spec.bumps.push_back(bump());
      } else {
        throw InvalidArgument("registry line " + std::to_string(line_no) + ": unknown field '" + field + "'");
      }
    } else {
      throw InvalidArgument("registry line " + std::to_string(line_no) + ": unknown group '" + group + "'");
    }
  }
  for (const auto& [name, spec] : reg.phantoms_) validate(spec);
  for (const auto& [name, spec] : reg.speeds_) validate(spec);
  return reg;
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open registry '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

const Registry& Registry::builtin() {
  static const Registry reg = parse(detail::kBuiltinRegistry);
  return reg;
}

const PhantomSpec& Registry::phantom(const std::string& name) const {
  const auto it = phantoms_.find(name);
  if (it == phantoms_.end()) throw InvalidArgument("unknown phantom '" + name + "'");
  return it->second;
}

const SpeedSpec& Registry::speed(const std::string& name) const {
  const auto it = speeds_.find(name);
  if (it == speeds_.end()) throw InvalidArgument("unknown sound speed '" + name + "'");
  return it->second;
}

ScalarField make_phantom(const PhantomSpec& spec, const Grid& grid, const DiscreteDomain& dom) {
  validate(spec);
  if (!(dom.grid() == grid)) throw InvalidArgument("phantom grid and domain grid differ");
  ScalarField f(grid);
  for (std::size_t k : dom.inside()) f[k] = evaluate(spec, grid.point(k));
  return f;
}

SoundSpeed make_speed(const SpeedSpec& spec, const Grid& grid, const DiscreteDomain& dom) {
  validate(spec);
  ScalarField c(grid);
  for (std::size_t k = 0; k < grid.count(); ++k) {
    const Point2 x = grid.point(k);
    c[k] = 1.0 + smooth_cutoff(norm(x), spec.cutoff.inner, spec.cutoff.outer) * bump_sum(spec.bumps, x);
  }
  SoundSpeed speed(std::move(c));
  require_unit_exterior_speed(speed, dom);
  return speed;
}

PipelineConfig make_unit_disc_pipeline(std::size_t n, double final_time, const SpeedSpec& speed,
                                       double half_width, double cfl, bool kspace_correction,
                                       DirichletSolveOptions elliptic) {
  const double a = half_width > 0.0 ? half_width : default_half_width(final_time);
  const Grid grid = make_grid(a, n);
  const DomainShape shape = DomainShape::unit_disc();
  const DiscreteDomain dom = discretize_domain(grid, shape);
  return make_pipeline(grid, shape, dom, make_speed(speed, grid, dom), final_time, cfl,
                       kspace_correction, elliptic);
}

ScalarField simulate_data(const PhantomSpec& phantom, const SpeedSpec& speed,
                          const PipelineConfig& cfg, std::size_t oversample) {
  if (oversample == 0 || oversample % 2 == 0) {
    throw InvalidArgument("oversampling factor must be odd and positive, got " +
                          std::to_string(oversample));
  }
  if (oversample == 1) {
    return forward_exterior(make_phantom(phantom, cfg.grid, cfg.dom), cfg);
  }
  const std::size_t n = cfg.grid.size();
  const Grid fine = make_grid(cfg.grid.half_width(), n * oversample);
  const DiscreteDomain fine_dom = discretize_domain(fine, cfg.shape);
  const PipelineConfig fine_cfg =
      make_pipeline(fine, cfg.shape, fine_dom, make_speed(speed, fine, fine_dom),
                    cfg.solver.final_time, cfg.solver.cfl, cfg.solver.kspace_correction, cfg.elliptic);
  const ScalarField fine_data = forward_exterior(make_phantom(phantom, fine, fine_dom), fine_cfg);

  ScalarField coarse(cfg.grid);
  for (std::size_t k : cfg.dom.exterior()) {
    const Index2 i = cfg.grid.unflatten(k);
    coarse[k] = fine_data[fine.flatten({i[0] * oversample, i[1] * oversample})];
  }
  return coarse;
}

}  // namespace ffpat

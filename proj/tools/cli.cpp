#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

#include "ffpat/analysis.hpp"
#include "ffpat/errors.hpp"
#include "ffpat/inversion.hpp"
#include "ffpat/io.hpp"
#include "ffpat/phantoms.hpp"

namespace ffpat::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr const char* kManifestFormat = "ffpat-manifest";
constexpr int kManifestVersion = 1;
constexpr const char* kBuiltin = "builtin";

struct GridParams {
  std::size_t n = 128;
  double final_time = 2.0;
  double half_width = 0.0;  // <= 0 selects T + 1.25
  double cfl = kDefaultCfl;
  bool kspace_correction = true;
  std::string registry;  // empty selects the builtin registry

  double resolved_half_width() const {
    return half_width > 0.0 ? half_width : default_half_width(final_time);
  }
};

struct SimulateParams {
  GridParams grid;
  std::string phantom = "a";
  std::string speed = "I";
  std::size_t oversample = 3;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  bool pgm = false;
};

struct ReconstructParams {
  GridParams grid;
  std::string data;
  std::string speed = "I";
  double lambda = 0.5;
  std::size_t iters = 80;
  double tol = 0.0;
  std::string truth;
  std::string out_prefix;
};

struct ContractionParams {
  GridParams grid;
  std::string speed = "I";
  std::vector<double> lambdas{0.5};
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::string out;
};

struct ExperimentParams {
  std::string name;
  std::size_t n = 128;
  std::size_t iters = 80;
  std::size_t oversample = 3;
  double noise = 0.02;
  std::uint64_t seed = 0;
  double cfl = kDefaultCfl;
  bool kspace_correction = true;
  std::string registry;
  std::string out_dir;
};

// ---- manifest serialization -------------------------------------------------

std::string registry_label(const std::string& path) { return path.empty() ? kBuiltin : path; }
std::string registry_path(const std::string& label) { return label == kBuiltin ? "" : label; }

void to_json(json& j, const GridParams& p) {
  j = json{{"N", p.n},
           {"T", p.final_time},
           {"a", p.resolved_half_width()},
           {"cfl", p.cfl},
           {"kspace_correction", p.kspace_correction},
           {"registry", registry_label(p.registry)}};
}

void from_json(const json& j, GridParams& p) {
  p.n = j.at("N").get<std::size_t>();
  p.final_time = j.at("T").get<double>();
  p.half_width = j.at("a").get<double>();
  p.cfl = j.at("cfl").get<double>();
  p.kspace_correction = j.at("kspace_correction").get<bool>();
  p.registry = registry_path(j.at("registry").get<std::string>());
}

void to_json(json& j, const SimulateParams& p) {
  j = json{{"grid", p.grid},         {"phantom", p.phantom}, {"speed", p.speed},
           {"oversample", p.oversample}, {"noise", p.noise},     {"seed", p.seed},
           {"out", p.out},           {"pgm", p.pgm}};
}

void from_json(const json& j, SimulateParams& p) {
  p.grid = j.at("grid").get<GridParams>();
  p.phantom = j.at("phantom").get<std::string>();
  p.speed = j.at("speed").get<std::string>();
  p.oversample = j.at("oversample").get<std::size_t>();
  p.noise = j.at("noise").get<double>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.out = j.at("out").get<std::string>();
  p.pgm = j.at("pgm").get<bool>();
}

void to_json(json& j, const ReconstructParams& p) {
  j = json{{"grid", p.grid},   {"data", p.data}, {"speed", p.speed},  {"lambda", p.lambda},
           {"iters", p.iters}, {"tol", p.tol},   {"truth", p.truth}, {"out_prefix", p.out_prefix}};
}

void from_json(const json& j, ReconstructParams& p) {
  p.grid = j.at("grid").get<GridParams>();
  p.data = j.at("data").get<std::string>();
  p.speed = j.at("speed").get<std::string>();
  p.lambda = j.at("lambda").get<double>();
  p.iters = j.at("iters").get<std::size_t>();
  p.tol = j.at("tol").get<double>();
  p.truth = j.at("truth").get<std::string>();
  p.out_prefix = j.at("out_prefix").get<std::string>();
}

void to_json(json& j, const ContractionParams& p) {
  j = json{{"grid", p.grid}, {"speed", p.speed}, {"lambdas", p.lambdas},
           {"trials", p.trials}, {"seed", p.seed}, {"out", p.out}};
}

void from_json(const json& j, ContractionParams& p) {
  p.grid = j.at("grid").get<GridParams>();
  p.speed = j.at("speed").get<std::string>();
  p.lambdas = j.at("lambdas").get<std::vector<double>>();
  p.trials = j.at("trials").get<std::size_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.out = j.at("out").get<std::string>();
}

void to_json(json& j, const ExperimentParams& p) {
  j = json{{"name", p.name},
           {"N", p.n},
           {"iters", p.iters},
           {"oversample", p.oversample},
           {"noise", p.noise},
           {"seed", p.seed},
           {"cfl", p.cfl},
           {"kspace_correction", p.kspace_correction},
           {"registry", registry_label(p.registry)},
           {"out_dir", p.out_dir}};
}

void from_json(const json& j, ExperimentParams& p) {
  p.name = j.at("name").get<std::string>();
  p.n = j.at("N").get<std::size_t>();
  p.iters = j.at("iters").get<std::size_t>();
  p.oversample = j.at("oversample").get<std::size_t>();
  p.noise = j.at("noise").get<double>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.cfl = j.at("cfl").get<double>();
  p.kspace_correction = j.at("kspace_correction").get<bool>();
  p.registry = registry_path(j.at("registry").get<std::string>());
  p.out_dir = j.at("out_dir").get<std::string>();
}

// ---- helpers ----------------------------------------------------------------

Registry load_registry(const std::string& path) {
  return path.empty() ? Registry::builtin() : Registry::load(path);
}

PipelineConfig pipeline(const GridParams& g, const SpeedSpec& speed) {
  return make_unit_disc_pipeline(g.n, g.final_time, speed, g.resolved_half_width(), g.cfl,
                                 g.kspace_correction);
}

// "dir/run.ff" + ".pgm" -> "dir/run.pgm"
std::string sibling(const std::string& path, const std::string& suffix) {
  fs::path p(path);
  p.replace_extension();
  return p.string() + suffix;
}

std::string rebase(const std::string& path, const std::string& dir) {
  return (fs::path(dir) / fs::path(path).filename()).string();
}

void ensure_parent(const std::string& path) {
  const auto parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

void write_manifest(const std::string& path, const std::string& command, const json& params,
                    int registry_version, const json& artifacts) {
  json m;
  m["format"] = kManifestFormat;
  m["version"] = kManifestVersion;
  m["command"] = command;
  m["registry_version"] = registry_version;
  m["parameters"] = params;
  m["artifacts"] = artifacts;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest '" + path + "'");
  out << m.dump(2) << '\n';
  if (!out) throw IoError("failed writing manifest '" + path + "'");
}

void print_artifacts(const json& artifacts, std::ostream& out) {
  for (const auto& [key, value] : artifacts.items()) {
    if (value.is_string()) {
      out << value.get<std::string>() << '\n';
    } else {
      for (const auto& v : value) out << v.get<std::string>() << '\n';
    }
  }
}

std::optional<ScalarField> resolve_truth(const std::string& truth, const Registry& reg,
                                         const PipelineConfig& cfg) {
  if (truth.empty()) return std::nullopt;
  if (truth.find('.') == std::string::npos && truth.find('/') == std::string::npos) {
    return make_phantom(reg.phantom(truth), cfg.grid, cfg.dom);
  }
  auto f = read_field(truth);
  if (!(f.grid() == cfg.grid)) throw InvalidArgument("ground truth grid does not match the flags");
  return f;
}

// ---- commands -----------------------------------------------------------------

int run_simulate(const SimulateParams& p, std::ostream& out) {
  if (p.out.empty()) throw InvalidArgument("--out is required");
  const Registry reg = load_registry(p.grid.registry);
  const SpeedSpec& speed = reg.speed(p.speed);
  const PhantomSpec& phantom = reg.phantom(p.phantom);
  const auto cfg = pipeline(p.grid, speed);
  const auto clean = simulate_data(phantom, speed, cfg, p.oversample);
  const auto g = add_noise(clean, cfg.dom, p.noise, p.seed);

  ensure_parent(p.out);
  json artifacts{{"data", p.out}};
  write_field(g, p.out, "pressure");
  if (p.pgm) {
    const std::string preview = sibling(p.out, ".pgm");
    write_pgm(g, preview);
    artifacts["preview"] = preview;
  }
  const std::string manifest = sibling(p.out, ".manifest.json");
  artifacts["manifest"] = manifest;
  write_manifest(manifest, "simulate", p, reg.version(), artifacts);
  print_artifacts(artifacts, out);
  return kSuccess;
}

int run_reconstruct(const ReconstructParams& p, std::ostream& out) {
  if (p.out_prefix.empty()) throw InvalidArgument("--out-prefix is required");
  if (p.data.empty()) throw InvalidArgument("--data is required");
  ReconConfig rc;
  rc.lambda = p.lambda;
  rc.max_iter = p.iters;
  rc.tol = p.tol;
  validate(rc);

  const Registry reg = load_registry(p.grid.registry);
  const auto cfg = pipeline(p.grid, reg.speed(p.speed));
  const auto data = read_field(p.data);
  if (data.grid().size() != cfg.grid.size() ||
      std::abs(data.grid().half_width() - cfg.grid.half_width()) > 1e-12) {
    std::ostringstream msg;
    msg << "data grid (N = " << data.grid().size() << ", a = " << format_exact(data.grid().half_width())
        << ") does not match the flags (N = " << cfg.grid.size()
        << ", a = " << format_exact(cfg.grid.half_width()) << ")";
    throw InvalidArgument(msg.str());
  }
  const ScalarField g(cfg.grid, {data.values().begin(), data.values().end()});
  const auto truth = resolve_truth(p.truth, reg, cfg);
  const auto res = reconstruct(g, cfg, rc, truth);

  ensure_parent(p.out_prefix);
  const std::string& base = p.out_prefix;
  json artifacts{{"reconstruction", base + ".ff"}, {"log", base + ".csv"}, {"image", base + ".pgm"}};
  write_field(res.f_rec, base + ".ff", "pressure");
  write_log(res.log, base + ".csv");
  write_pgm(res.f_rec, base + ".pgm");
  if (truth) {
    const auto report = compare(res.f_rec, *truth, cfg.dom);
    write_pgm(report.pointwise, base + "_error.pgm");
    artifacts["error_image"] = base + "_error.pgm";
    out << "l2_rel " << format_exact(report.l2_rel) << " h10_rel " << format_exact(report.h10_rel) << '\n';
  }
  artifacts["manifest"] = base + ".manifest.json";
  write_manifest(base + ".manifest.json", "reconstruct", p, reg.version(), artifacts);
  print_artifacts(artifacts, out);
  return kSuccess;
}

int run_contraction(const ContractionParams& p, std::ostream& out, std::ostream& err) {
  if (p.lambdas.empty()) throw InvalidArgument("at least one --lambda is required");
  if (p.trials == 0) throw InvalidArgument("--trials must be at least 1");
  for (double l : p.lambdas) require_relaxation(l);
  const Registry reg = load_registry(p.grid.registry);
  const auto cfg = pipeline(p.grid, reg.speed(p.speed));
  const auto est = estimate_contraction(p.lambdas, p.trials, p.seed, cfg);

  double worst = 0.0;
  std::ostringstream csv;
  csv << "lambda,trial,ratio\n";
  for (const auto& e : est) {
    for (std::size_t t = 0; t < e.ratios.size(); ++t) {
      out << "lambda " << e.lambda << " trial " << t << " ratio " << format_exact(e.ratios[t]) << '\n';
      csv << format_exact(e.lambda) << ',' << t << ',' << format_exact(e.ratios[t]) << '\n';
    }
    out << "lambda " << e.lambda << " max " << format_exact(e.max_ratio) << '\n';
    worst = std::max(worst, e.max_ratio);
  }

  if (!p.out.empty()) {
    ensure_parent(p.out);
    std::ofstream file(p.out);
    if (!(file << csv.str())) throw IoError("cannot write '" + p.out + "'");
    const std::string manifest = sibling(p.out, ".manifest.json");
    json artifacts{{"ratios", p.out}, {"manifest", manifest}};
    write_manifest(manifest, "contraction", p, reg.version(), artifacts);
    print_artifacts(artifacts, out);
  }
  if (!(worst < 1.0)) {
    err << "ffpat: contraction fails: max ratio " << format_exact(worst) << " >= 1\n";
    return kNumerical;
  }
  return kSuccess;
}

struct Cell {
  std::string phantom;
  std::string speed;
  double lambda;
  double final_time;
  double noise;
};

std::vector<Cell> experiment_cells(const ExperimentParams& p) {
  if (p.name == "constant") {
    return {{"a", "I", 2.0, 2.0, 0.0}, {"b", "I", 2.0, 2.0, 0.0}, {"c", "I", 2.0, 2.0, 0.0}};
  }
  if (p.name == "variable") {
    return {{"a", "II", 0.5, 2.0, 0.0}, {"a", "III", 0.5, 2.0, 0.0}, {"a", "IV", 0.5, 2.0, 0.0}};
  }
  if (p.name == "noisy") {
    return {{"a", "III", 0.5, 4.0, 0.0}, {"a", "III", 0.5, 4.0, p.noise}};
  }
  if (p.name == "trapping") {
    return {{"a", "IV", 0.5, 2.0, p.noise}, {"b", "IV", 0.5, 2.0, p.noise}, {"c", "IV", 0.5, 2.0, p.noise}};
  }
  throw InvalidArgument("unknown experiment '" + p.name + "' (constant, variable, noisy, trapping)");
}

int run_experiment(const ExperimentParams& p, std::ostream& out) {
  if (p.out_dir.empty()) throw InvalidArgument("--out-dir is required");
  const auto cells = experiment_cells(p);
  const Registry reg = load_registry(p.registry);
  fs::create_directories(p.out_dir);

  std::map<std::pair<std::string, double>, PipelineConfig> pipes;
  const std::string summary_path = (fs::path(p.out_dir) / "summary.csv").string();
  const std::string manifest = (fs::path(p.out_dir) / "manifest.json").string();
  json artifacts{{"summary", summary_path}, {"cells", json::array()}};
  std::ostringstream summary;
  summary << "cell,phantom,speed,lambda,T,noise,iters,l2_rel,h10_rel\n";

  for (const auto& cell : cells) {
    const SpeedSpec& speed = reg.speed(cell.speed);
    auto key = std::make_pair(cell.speed, cell.final_time);
    auto it = pipes.find(key);
    if (it == pipes.end()) {
      it = pipes.emplace(key, make_unit_disc_pipeline(p.n, cell.final_time, speed, 0.0, p.cfl,
                                                      p.kspace_correction)).first;
    }
    const PipelineConfig& cfg = it->second;
    const PhantomSpec& phantom = reg.phantom(cell.phantom);
    const auto truth = make_phantom(phantom, cfg.grid, cfg.dom);
    const auto g = simulate_data(phantom, speed, cfg, p.oversample);

    ReconConfig rc;
    rc.lambda = cell.lambda;
    rc.max_iter = p.iters;
    rc.seed = p.seed;
    const auto res = reconstruct_noisy(g, cell.noise, rc, cfg, truth);
    const auto report = compare(res.f_rec, truth, cfg.dom);

    std::string name = cell.phantom + "_" + cell.speed + "_T" + format_exact(cell.final_time);
    if (cell.noise > 0.0) name += "_noisy";
    const std::string base = (fs::path(p.out_dir) / name).string();
    write_field(res.f_rec, base + ".ff", "pressure");
    write_log(res.log, base + ".csv");
    write_pgm(res.f_rec, base + ".pgm");
    write_pgm(report.pointwise, base + "_error.pgm");
    for (const char* suffix : {".ff", ".csv", ".pgm", "_error.pgm"}) artifacts["cells"].push_back(base + suffix);

    summary << name << ',' << cell.phantom << ',' << cell.speed << ',' << format_exact(cell.lambda) << ','
            << format_exact(cell.final_time) << ',' << format_exact(cell.noise) << ',' << p.iters << ','
            << format_exact(report.l2_rel) << ',' << format_exact(report.h10_rel) << '\n';
  }

  {
    std::ofstream file(summary_path);
    if (!(file << summary.str())) throw IoError("cannot write the experiment summary");
  }
  out << summary.str();
  artifacts["manifest"] = manifest;
  write_manifest(manifest, "experiment", p, reg.version(), artifacts);
  print_artifacts(artifacts, out);
  return kSuccess;
}

int run_replay(const std::string& manifest_path, const std::string& out_dir, std::ostream& out,
               std::ostream& err) {
  std::ifstream in(manifest_path);
  if (!in) throw IoError("cannot open manifest '" + manifest_path + "'");
  const json m = json::parse(in);
  if (m.at("format") != kManifestFormat) throw InvalidArgument("'" + manifest_path + "' is not a run manifest");
  if (m.at("version").get<int>() != kManifestVersion) {
    throw InvalidArgument("unsupported manifest version " + m.at("version").dump());
  }
  const std::string command = m.at("command").get<std::string>();
  const json& params = m.at("parameters");
  if (command == "simulate") {
    auto p = params.get<SimulateParams>();
    if (!out_dir.empty()) p.out = rebase(p.out, out_dir);
    return run_simulate(p, out);
  }
  if (command == "reconstruct") {
    auto p = params.get<ReconstructParams>();
    if (!out_dir.empty()) p.out_prefix = rebase(p.out_prefix, out_dir);
    return run_reconstruct(p, out);
  }
  if (command == "contraction") {
    auto p = params.get<ContractionParams>();
    if (!out_dir.empty() && !p.out.empty()) p.out = rebase(p.out, out_dir);
    return run_contraction(p, out, err);
  }
  if (command == "experiment") {
    auto p = params.get<ExperimentParams>();
    if (!out_dir.empty()) p.out_dir = out_dir;
    return run_experiment(p, out);
  }
  throw InvalidArgument("manifest names unknown command '" + command + "'");
}

// ---- argument parsing -----------------------------------------------------------

void add_grid_options(CLI::App* sub, GridParams& g) {
  sub->add_option("--N", g.n, "grid points per axis")->capture_default_str();
  sub->add_option("--T", g.final_time, "observation time")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--a", g.half_width, "box half-width (default T + 1.25)");
  sub->add_option("--cfl", g.cfl, "Courant number")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_flag("--kspace-correction,!--no-kspace-correction", g.kspace_correction,
                "k-space corrected Laplacian");
  sub->add_option("--registry", g.registry, "phantom/speed registry file (default: builtin)");
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Full-field photoacoustic reconstruction by iterative time reversal", "ffpat"};
  app.require_subcommand(1);

  SimulateParams sim;
  auto* s = app.add_subcommand("simulate", "simulate exterior data for a registry phantom");
  add_grid_options(s, sim.grid);
  s->add_option("--phantom", sim.phantom, "phantom name")->capture_default_str();
  s->add_option("--speed", sim.speed, "sound speed name")->capture_default_str();
  s->add_option("--oversample", sim.oversample, "odd refinement factor of the data grid")->capture_default_str();
  s->add_option("--noise", sim.noise, "noise level relative to max |g|")->capture_default_str();
  s->add_option("--seed", sim.seed, "noise seed")->capture_default_str();
  s->add_option("--out", sim.out, "output field file")->required();
  s->add_flag("--pgm", sim.pgm, "also write a PGM preview");

  ReconstructParams rec;
  auto* r = app.add_subcommand("reconstruct", "iterative time-reversal reconstruction");
  add_grid_options(r, rec.grid);
  r->add_option("--data", rec.data, "exterior data field file")->required();
  r->add_option("--speed", rec.speed, "sound speed name")->capture_default_str();
  r->add_option("--lambda", rec.lambda, "relaxation parameter in (0, 2]")->capture_default_str();
  r->add_option("--iters", rec.iters, "iteration budget")->capture_default_str();
  r->add_option("--tol", rec.tol, "residual stopping threshold (0 disables)")->capture_default_str();
  r->add_option("--truth", rec.truth, "phantom name or field file used for error reporting");
  r->add_option("--out-prefix", rec.out_prefix, "prefix of the output files")->required();

  ContractionParams con;
  auto* c = app.add_subcommand("contraction", "estimate ||K f|| / ||f|| on random fields");
  add_grid_options(c, con.grid);
  c->add_option("--speed", con.speed, "sound speed name")->capture_default_str();
  c->add_option("--lambda", con.lambdas, "relaxation parameter(s)")->capture_default_str();
  c->add_option("--trials", con.trials, "random fields per lambda")->capture_default_str();
  c->add_option("--seed", con.seed, "master seed")->capture_default_str();
  c->add_option("--out", con.out, "CSV of all ratios (writes a manifest too)");

  ExperimentParams expt;
  auto* e = app.add_subcommand("experiment", "batch reproduction of one numerical study");
  e->add_option("--name", expt.name, "constant, variable, noisy or trapping")->required();
  e->add_option("--N", expt.n, "grid points per axis")->capture_default_str();
  e->add_option("--iters", expt.iters, "iteration budget")->capture_default_str();
  e->add_option("--oversample", expt.oversample, "odd refinement factor of the data grid")->capture_default_str();
  e->add_option("--noise", expt.noise, "noise level of the noisy runs")->capture_default_str();
  e->add_option("--seed", expt.seed, "noise seed")->capture_default_str();
  e->add_option("--cfl", expt.cfl, "Courant number")->capture_default_str()->check(CLI::PositiveNumber);
  e->add_flag("--kspace-correction,!--no-kspace-correction", expt.kspace_correction,
              "k-space corrected Laplacian");
  e->add_option("--registry", expt.registry, "phantom/speed registry file (default: builtin)");
  e->add_option("--out-dir", expt.out_dir, "output directory")->required();

  std::string manifest, replay_dir;
  auto* rp = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  rp->add_option("--manifest", manifest, "manifest JSON file")->required();
  rp->add_option("--out-dir", replay_dir, "write artifacts here instead of the recorded paths");

  std::vector<const char*> argv{"ffpat"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& ex) {
    err << "ffpat: " << one_line(ex.what()) << '\n';
    return kUsage;
  }

  try {
    if (*s) return run_simulate(sim, out);
    if (*r) return run_reconstruct(rec, out);
    if (*c) return run_contraction(con, out, err);
    if (*e) return run_experiment(expt, out);
    return run_replay(manifest, replay_dir, out, err);
  } catch (const InvalidArgument& ex) {
    err << "ffpat: " << one_line(ex.what()) << '\n';
    return kUsage;
  } catch (const IoError& ex) {
    err << "ffpat: " << one_line(ex.what()) << '\n';
    return kUsage;
  } catch (const json::exception& ex) {
    err << "ffpat: malformed manifest: " << one_line(ex.what()) << '\n';
    return kUsage;
  } catch (const fs::filesystem_error& ex) {
    err << "ffpat: " << one_line(ex.what()) << '\n';
    return kUsage;
  } catch (const NumericalError& ex) {
    err << "ffpat: numerical failure: " << one_line(ex.what()) << '\n';
    return kNumerical;
  } catch (const std::exception& ex) {
    err << "ffpat: " << one_line(ex.what()) << '\n';
    return kNumerical;
  }
}

}  // namespace ffpat::cli

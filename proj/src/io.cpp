#include "ffpat/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "ffpat/errors.hpp"

namespace ffpat {

namespace {

std::uint64_t to_little_endian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int b = 0; b < 8; ++b) r |= ((v >> (8 * b)) & 0xFFu) << (8 * (7 - b));
    return r;
  }
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_field(const ScalarField& f, const std::string& path, const std::string& units) {
  if (units.empty() || units.find_first_of(" \t\n") != std::string::npos) {
    throw InvalidArgument("field units must be a single non-empty token");
  }
  auto out = open_out(path);
  out << "FF2D " << f.grid().size() << ' ' << format_exact(f.grid().half_width()) << ' ' << units << '\n';
  std::vector<char> payload(8 * f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const std::uint64_t bits = to_little_endian(std::bit_cast<std::uint64_t>(f[k]));
    std::memcpy(payload.data() + 8 * k, &bits, 8);
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  finish(out, path);
}

FieldFile read_field_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string header;
  if (!std::getline(in, header)) throw IoError("'" + path + "': missing header line");

  std::istringstream hs(header);
  std::string magic, units, extra;
  long long n = 0;
  double a = 0.0;
  if (!(hs >> magic >> n >> a >> units) || magic != "FF2D" || (hs >> extra)) {
    throw IoError("'" + path + "': malformed header, expected \"FF2D <N> <a> <units>\"");
  }
  if (n < 2 || n % 2 != 0 || !(a > 0.0)) {
    throw IoError("'" + path + "': invalid grid in header (N=" + std::to_string(n) + ")");
  }
  const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const std::size_t expected = 8 * count;
  std::vector<char> payload(expected);
  in.read(payload.data(), static_cast<std::streamsize>(expected));
  const auto found = static_cast<std::size_t>(in.gcount());
  if (found != expected) {
    throw IoError("'" + path + "': truncated payload, expected " + std::to_string(expected) +
                  " bytes, found " + std::to_string(found));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw IoError("'" + path + "': payload longer than the " + std::to_string(expected) +
                  " bytes announced by the header");
  }
  std::vector<double> values(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::uint64_t bits;
    std::memcpy(&bits, payload.data() + 8 * k, 8);
    values[k] = std::bit_cast<double>(to_little_endian(bits));
  }
  return {ScalarField(Grid(a, static_cast<std::size_t>(n)), std::move(values)), units};
}

ScalarField read_field(const std::string& path) { return read_field_file(path).field; }

void write_pgm(const ScalarField& f, const std::string& path, const std::optional<ClipRange>& clip) {
  require_finite(f, "image");
  double lo, hi;
  if (clip) {
    std::tie(lo, hi) = *clip;
  } else {
    const auto [mn, mx] = std::minmax_element(f.values().begin(), f.values().end());
    lo = *mn;
    hi = *mx;
  }
  const std::size_t n = f.grid().size();
  std::vector<unsigned char> pixels(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double v = f(c, n - 1 - r);
      unsigned char p = 128;
      if (hi > lo) {
        const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
        p = static_cast<unsigned char>(std::lround(255.0 * t));
      }
      pixels[r * n + c] = p;
    }
  }
  auto out = open_out(path);
  out << "P5\n" << n << ' ' << n << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
  finish(out, path);
}

void write_log(const ConvergenceLog& log, const std::string& path) {
  auto out = open_out(path);
  out << "iter,residual_h10,error_h10\n";
  for (const auto& rec : log.records) {
    out << rec.iter << ',' << format_exact(rec.residual_h10) << ',';
    if (rec.error_h10) out << format_exact(*rec.error_h10);
    out << '\n';
  }
  finish(out, path);
}

ConvergenceLog read_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "iter,residual_h10,error_h10") {
    throw IoError("'" + path + "': missing convergence log header");
  }
  ConvergenceLog log;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw IoError("'" + path + "': malformed log row '" + line + "'");
    }
    IterationRecord rec;
    try {
      rec.iter = std::stoull(line.substr(0, c1));
      rec.residual_h10 = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
      const std::string err = line.substr(c2 + 1);
      if (!err.empty()) rec.error_h10 = std::stod(err);
    } catch (const std::logic_error&) {
      throw IoError("'" + path + "': malformed log row '" + line + "'");
    }
    log.records.push_back(rec);
  }
  return log;
}

}  // namespace ffpat

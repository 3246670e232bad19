#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ffpat/field.hpp"
#include "ffpat/inversion.hpp"

namespace ffpat {

/// Field file layout: one text line "FF2D <N> <a> <units>\n" followed by N^2
/// little-endian IEEE-754 doubles, row-major with i2 fastest.  <a> is written
/// with 17 significant digits so the grid round-trips exactly.
struct FieldFile {
  ScalarField field;
  std::string units;
};

void write_field(const ScalarField& f, const std::string& path, const std::string& units = "arb");
FieldFile read_field_file(const std::string& path);
ScalarField read_field(const std::string& path);

using ClipRange = std::pair<double, double>;

/// 8-bit binary PGM (P5).  Pixel (row r, column c) shows grid point
/// (i1 = c, i2 = N - 1 - r), i.e. x1 to the right and x2 upwards.  Values are
/// mapped linearly from the clip range (default: field min/max) to 0..255
/// with saturation; a degenerate range gives uniform gray 128.
void write_pgm(const ScalarField& f, const std::string& path,
               const std::optional<ClipRange>& clip = std::nullopt);

/// CSV with header "iter,residual_h10,error_h10"; 17 significant digits;
/// the error column is empty when no ground truth was supplied.
void write_log(const ConvergenceLog& log, const std::string& path);
ConvergenceLog read_log(const std::string& path);

/// v with 17 significant digits ("%.17g"), which reads back exactly.
std::string format_exact(double v);

}  // namespace ffpat

// File formats: binary PGM rasters, ASCII OBJ meshes and CSV tables.
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "multibrot/geometry.hpp"

namespace multibrot {

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, res.ptr);
}

/// P5, maxval 255, member = 0 (black), non-member = 255.  The first image row
/// is the top of the window (largest y).
inline void write_pgm(std::ostream& os, const RasterGrid& grid) {
  const int w = grid.domain.axes[0].n;
  const int h = grid.domain.axes[1].n;
  os << "P5\n" << w << ' ' << h << "\n255\n";
  std::vector<char> row(static_cast<std::size_t>(w));
  for (int iy = h - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < w; ++ix)
      row[ix] = static_cast<char>(grid.member(static_cast<std::size_t>(iy) * w + ix) ? 0 : 255);
    os.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

/// Triangulated OBJ with 1-based face indices.
inline void write_obj(std::ostream& os, const OctahedronMesh& mesh) {
  for (const auto& v : mesh.vertices)
    os << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' ' << format_double(v[2]) << '\n';
  for (const auto& f : mesh.faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

template <std::size_t N>
void write_points_csv(std::ostream& os, const std::vector<Point<N>>& points) {
  static constexpr const char* names[] = {"x", "y", "z"};
  static_assert(N >= 1 && N <= 3);
  for (std::size_t d = 0; d < N; ++d) os << (d ? "," : "") << names[d];
  os << '\n';
  for (const auto& p : points) {
    for (std::size_t d = 0; d < N; ++d) os << (d ? "," : "") << format_double(p[d]);
    os << '\n';
  }
}

/// Simple table: one header row followed by data rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) throw std::invalid_argument("CsvTable: row width does not match header");
    rows.push_back(std::move(row));
  }
};

inline void write_csv(std::ostream& os, const CsvTable& table) {
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string& c = cells[i];
      if (i) os << ',';
      if (c.find_first_of(",\"\n") != std::string::npos) {
        os << '"';
        for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
        os << '"';
      } else {
        os << c;
      }
    }
    os << '\n';
  };
  emit(table.header);
  for (const auto& r : table.rows) emit(r);
}

/// Opens `path` for binary writing or throws std::runtime_error.
inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

}  // namespace multibrot

#include "dwl/cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace dwl::cli {

namespace {

// viridis sampled at 0, 1/8, ..., 1
constexpr std::array<std::array<int, 3>, 9> kAnchors{{
    {68, 1, 84},
    {71, 44, 122},
    {59, 81, 139},
    {44, 113, 142},
    {33, 144, 141},
    {39, 173, 129},
    {92, 200, 99},
    {170, 220, 50},
    {253, 231, 37},
}};

std::array<std::array<std::uint8_t, 3>, 256> build_table() {
  std::array<std::array<std::uint8_t, 3>, 256> t{};
  for (int i = 0; i < 256; ++i) {
    const double x = i / 255.0 * (kAnchors.size() - 1);
    const int lo = std::min(static_cast<int>(x), static_cast<int>(kAnchors.size()) - 2);
    const double f = x - lo;
    for (int c = 0; c < 3; ++c) {
      const double v = kAnchors[lo][c] + f * (kAnchors[lo + 1][c] - kAnchors[lo][c]);
      t[i][c] = static_cast<std::uint8_t>(std::lround(v));
    }
  }
  return t;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

void write_csv_row(std::ostream& os, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << format_double(values[i]);
  }
  os << '\n';
}

std::array<std::uint8_t, 3> colormap(double t) {
  static const auto table = build_table();
  if (!(t > 0.0)) return table.front();
  if (t >= 1.0) return table.back();
  return table[static_cast<std::size_t>(t * 255.0 + 0.5)];
}

void write_ppm(std::ostream& os, const std::vector<double>& values, int width, int height) {
  double lo = values.empty() ? 0.0 : values.front();
  double hi = lo;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  os << "P6\n" << width << ' ' << height << "\n255\n";
  for (double v : values) {
    const auto c = colormap((v - lo) / span);
    os.write(reinterpret_cast<const char*>(c.data()), 3);
  }
}

}  // namespace dwl::cli

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dwl::cli {

/// "%.15g".
std::string format_double(double v);

/// Comma-joined row terminated by '\n'.
void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);
void write_csv_row(std::ostream& os, const std::vector<double>& values);

/// Viridis-like colour for t in [0,1] (clamped), from a fixed 256-entry table.
std::array<std::uint8_t, 3> colormap(double t);

/// Binary P6 image of a row-major width x height field, min..max mapped
/// onto the colormap. Row 0 is written first (top of the image).
void write_ppm(std::ostream& os, const std::vector<double>& values, int width, int height);

}  // namespace dwl::cli

#ifndef RECURNLP_RENDER_HPP
#define RECURNLP_RENDER_HPP

#include <filesystem>
#include <ostream>
#include <string>

#include "recurnlp/recurrence.hpp"

namespace recurnlp {

enum class RenderFormat { Pbm, Svg, Csv };

// Plain P1 bitmap, one cell per (i,j). i runs left to right, j bottom to
// top, so the LOI of an auto plot runs bottom-left to top-right.
void write_pbm(const RecurrencePlot& rp, std::ostream& os);

// One square glyph per point, same orientation as the bitmap.
void write_svg(const RecurrencePlot& rp, std::ostream& os);

// Coordinate list with header `i,j`.
void write_coords_csv(const RecurrencePlot& rp, std::ostream& os);

// Writes the chosen format to path; throws IoError when the path is not
// writable. Output bytes are identical for identical plots.
void render_rp(const RecurrencePlot& rp, const std::filesystem::path& path, RenderFormat format);

RenderFormat parse_render_format(const std::string& name); // "pbm" | "svg" | "csv"

} // namespace recurnlp

#endif

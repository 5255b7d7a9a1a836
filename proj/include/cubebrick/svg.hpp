#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubebrick/montucla2d.hpp"

namespace cubebrick {

enum class SvgMode { Rectangle, Square, Tiling, SideBySide };

std::optional<SvgMode> parse_svg_mode(std::string_view name);
const char* to_string(SvgMode mode) noexcept;

struct SvgPolygon {
  Polygon points;      // world coordinates, y up
  std::string fill;    // "none" for outlines
  std::string klass;   // "piece", "ghost" or "outline"
  std::string panel;   // "rectangle", "square" or "tiling"
  std::string label;   // piece label "(u1,u2)", empty for ghosts
};

struct SvgText {
  Point2 at;
  std::string text;
};

/// Geometry of one figure before serialization.
struct SvgScene {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;  // world bounds
  double pixels_per_unit = 240.0;
  double stroke_width = 0.0;  // world units
  double font_size = 0.0;     // world units
  std::vector<SvgPolygon> polygons;
  std::vector<SvgText> labels;
};

inline constexpr std::size_t kPaletteSize = 8;
const char* palette_color(std::size_t index) noexcept;

/// Throws InvalidAspect for a < 1.
SvgScene build_scene(double a, SvgMode mode);

/// Serializes with the y axis flipped, a 5% margin around the geometry and
/// every coordinate printed with six decimals.
std::string to_svg(const SvgScene& scene);

std::string render_dissection_svg(double a, SvgMode mode);

}  // namespace cubebrick

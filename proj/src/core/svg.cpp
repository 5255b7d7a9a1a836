#include "cubebrick/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cubebrick {
namespace {

constexpr const char* kPalette[kPaletteSize] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string label_of(const Piece2D& p) {
  std::ostringstream os;
  os << '(' << p.u[0] << ',' << p.u[1] << ')';
  return os.str();
}

Point2 centroid(const Polygon& poly) {
  Point2 c;
  for (const Point2& p : poly) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(poly.size());
  c.y /= static_cast<double>(poly.size());
  return c;
}

Polygon shifted(const Polygon& poly, double dx) {
  Polygon out = poly;
  for (Point2& p : out) p.x += dx;
  return out;
}

void add_pieces(SvgScene& scene, const std::vector<Piece2D>& pieces, bool in_square, double dx,
                const char* panel) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Polygon poly = shifted(in_square ? pieces[i].in_square : pieces[i].in_rect, dx);
    const std::string label = label_of(pieces[i]);
    scene.labels.push_back({centroid(poly), label});
    scene.polygons.push_back({poly, palette_color(i), "piece", panel, label});
  }
}

}  // namespace

std::optional<SvgMode> parse_svg_mode(std::string_view name) {
  if (name == "rectangle") return SvgMode::Rectangle;
  if (name == "square") return SvgMode::Square;
  if (name == "tiling") return SvgMode::Tiling;
  if (name == "side-by-side") return SvgMode::SideBySide;
  return std::nullopt;
}

const char* to_string(SvgMode mode) noexcept {
  switch (mode) {
    case SvgMode::Rectangle: return "rectangle";
    case SvgMode::Square: return "square";
    case SvgMode::Tiling: return "tiling";
    case SvgMode::SideBySide: return "side-by-side";
  }
  return "unknown";
}

const char* palette_color(std::size_t index) noexcept { return kPalette[index % kPaletteSize]; }

SvgScene build_scene(double a, SvgMode mode) {
  const Lattice2D lattice = montucla_lattice(a);
  const std::vector<Piece2D> pieces = enumerate_pieces(a);
  const Polygon rect = lattice.rectangle();
  double rect_max_x = 0.0;
  for (const Point2& p : rect) rect_max_x = std::max(rect_max_x, p.x);

  SvgScene scene;
  switch (mode) {
    case SvgMode::Rectangle:
      add_pieces(scene, pieces, false, 0.0, "rectangle");
      break;
    case SvgMode::Square:
      add_pieces(scene, pieces, true, 0.0, "square");
      break;
    case SvgMode::Tiling:
      for (std::int64_t u1 = -2; u1 <= 2; ++u1) {
        for (std::int64_t u2 = -2; u2 <= 2; ++u2) {
          const Point2 w = lattice.point(u1, u2);
          Polygon sq{{w.x, w.y}, {w.x + 1.0, w.y}, {w.x + 1.0, w.y + 1.0}, {w.x, w.y + 1.0}};
          scene.polygons.push_back({std::move(sq), "none", "ghost", "tiling", ""});
        }
      }
      add_pieces(scene, pieces, false, 0.0, "tiling");
      break;
    case SvgMode::SideBySide:
      add_pieces(scene, pieces, false, 0.0, "rectangle");
      add_pieces(scene, pieces, true, rect_max_x + 0.5, "square");
      break;
  }

  bool first = true;
  for (const SvgPolygon& poly : scene.polygons) {
    for (const Point2& p : poly.points) {
      if (first) {
        scene.min_x = scene.max_x = p.x;
        scene.min_y = scene.max_y = p.y;
        first = false;
      }
      scene.min_x = std::min(scene.min_x, p.x);
      scene.max_x = std::max(scene.max_x, p.x);
      scene.min_y = std::min(scene.min_y, p.y);
      scene.max_y = std::max(scene.max_y, p.y);
    }
  }
  const double extent = std::max(scene.max_x - scene.min_x, scene.max_y - scene.min_y);
  scene.stroke_width = 0.004 * extent;
  scene.font_size = 0.035 * extent;
  return scene;
}

std::string to_svg(const SvgScene& scene) {
  const double w = scene.max_x - scene.min_x;
  const double h = scene.max_y - scene.min_y;
  const double mx = 0.05 * w;
  const double my = 0.05 * h;
  const double vb_x = scene.min_x - mx;
  const double vb_y = -scene.max_y - my;  // y flipped
  const double vb_w = w + 2.0 * mx;
  const double vb_h = h + 2.0 * my;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << fmt(vb_w * scene.pixels_per_unit) << "\" height=\"" << fmt(vb_h * scene.pixels_per_unit)
     << "\" viewBox=\"" << fmt(vb_x) << ' ' << fmt(vb_y) << ' ' << fmt(vb_w) << ' ' << fmt(vb_h)
     << "\">\n";
  os << "<g stroke-linejoin=\"round\" stroke-width=\"" << fmt(scene.stroke_width) << "\">\n";
  for (const SvgPolygon& poly : scene.polygons) {
    os << "<polygon class=\"" << poly.klass << "\" data-panel=\"" << poly.panel << '"';
    if (!poly.label.empty()) os << " data-u=\"" << poly.label << '"';
    if (poly.klass == "ghost") {
      os << " fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"" << fmt(4 * scene.stroke_width)
         << "\"";
    } else {
      os << " fill=\"" << poly.fill << "\" fill-opacity=\"0.85\" stroke=\"#000000\"";
    }
    os << " points=\"";
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
      if (i) os << ' ';
      os << fmt(poly.points[i].x) << ',' << fmt(-poly.points[i].y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"" << fmt(scene.font_size)
     << "\" text-anchor=\"middle\" fill=\"#000000\">\n";
  for (const SvgText& t : scene.labels) {
    os << "<text x=\"" << fmt(t.at.x) << "\" y=\"" << fmt(-t.at.y) << "\">" << t.text
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_dissection_svg(double a, SvgMode mode) { return to_svg(build_scene(a, mode)); }

}  // namespace cubebrick

#include "cubebrick/montucla2d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cubebrick/error.hpp"

namespace cubebrick {
namespace {

constexpr double kMinPieceArea = 1e-12;
constexpr double kVertexMerge = 1e-12;

// Drops repeated vertices, orients counterclockwise and starts at the
// lexicographically smallest vertex so output is stable.
Polygon normalize(Polygon poly) {
  Polygon out;
  for (const Point2& p : poly) {
    if (!out.empty() && std::hypot(p.x - out.back().x, p.y - out.back().y) < kVertexMerge) {
      continue;
    }
    out.push_back(p);
  }
  while (out.size() > 1 &&
         std::hypot(out.front().x - out.back().x, out.front().y - out.back().y) < kVertexMerge) {
    out.pop_back();
  }
  if (polygon_area(out) < 0.0) std::reverse(out.begin(), out.end());
  auto first = std::min_element(out.begin(), out.end(), [](const Point2& l, const Point2& r) {
    return l.x < r.x || (l.x == r.x && l.y < r.y);
  });
  std::rotate(out.begin(), first, out.end());
  return out;
}

std::size_t ceil_tolerant(double v) {
  return static_cast<std::size_t>(std::ceil(v - 1e-9));
}

}  // namespace

Polygon Lattice2D::rectangle() const {
  const Point2 s = short_side();
  const Point2 l = long_side();
  return {{0.0, 0.0}, s, {s.x + l.x, s.y + l.y}, l};
}

Lattice2D montucla_lattice(double a) {
  if (!std::isfinite(a) || !(a >= 1.0)) {
    std::ostringstream os;
    os << "aspect " << a << " is invalid; need a finite a >= 1";
    throw Error(ErrorCode::InvalidAspect, os.str());
  }
  return Lattice2D{std::sqrt((a - 1.0) * (a + 1.0))};
}

double polygon_area(const Polygon& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return 0.5 * s;
}

Polygon clip_halfplane(const Polygon& poly, double nx, double ny, double c) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    const double dp = nx * p.x + ny * p.y - c;
    const double dq = nx * q.x + ny * q.y - c;
    if (dp <= 0.0) out.push_back(p);
    if ((dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0)) {
      const double t = dp / (dp - dq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

std::vector<Piece2D> enumerate_pieces(double a) {
  const Lattice2D lattice = montucla_lattice(a);
  const Polygon rect = lattice.rectangle();
  // Labels satisfy -(2a+1) < u_1 < a+1 and -1 <= u_2 <= 2.
  const auto radius = static_cast<std::int64_t>(2 * std::ceil(a) + 3);

  std::vector<Piece2D> pieces;
  for (std::int64_t u1 = -radius; u1 <= radius; ++u1) {
    for (std::int64_t u2 = -radius; u2 <= radius; ++u2) {
      const Point2 w = lattice.point(u1, u2);
      Polygon poly = rect;
      poly = clip_halfplane(poly, -1.0, 0.0, w.x);
      poly = clip_halfplane(poly, 1.0, 0.0, 1.0 - w.x);
      poly = clip_halfplane(poly, 0.0, -1.0, w.y);
      poly = clip_halfplane(poly, 0.0, 1.0, 1.0 - w.y);
      if (poly.size() < 3) continue;
      poly = normalize(std::move(poly));
      if (poly.size() < 3 || polygon_area(poly) < kMinPieceArea) continue;

      Piece2D piece;
      piece.u = {u1, u2};
      piece.in_square.reserve(poly.size());
      for (const Point2& p : poly) piece.in_square.push_back({p.x + w.x, p.y + w.y});
      piece.in_rect = std::move(poly);
      pieces.push_back(std::move(piece));
    }
  }
  return pieces;
}

std::size_t piece_count_bound(double a) {
  const Lattice2D lattice = montucla_lattice(a);
  return 2 + ceil_tolerant(lattice.beta);
}

std::size_t piece_count_bound_loose(double a) {
  montucla_lattice(a);
  return ceil_tolerant(a) + 2;
}

}  // namespace cubebrick

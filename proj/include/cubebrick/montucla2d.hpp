#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cubebrick {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Convex polygon, counterclockwise.
using Polygon = std::vector<Point2>;

/// Planar lattice generated by the rows (1, 0) and (beta, 1).
struct Lattice2D {
  double beta = 0.0;

  Point2 point(std::int64_t u1, std::int64_t u2) const {
    return {static_cast<double>(u1) + static_cast<double>(u2) * beta, static_cast<double>(u2)};
  }
  /// Short side of the rectangle realization, length 1/sqrt(1+beta^2).
  Point2 short_side() const {
    const double s = 1.0 + beta * beta;
    return {1.0 / s, -beta / s};
  }
  /// Long side of the rectangle realization, length sqrt(1+beta^2).
  Point2 long_side() const { return {beta, 1.0}; }
  /// The rectangle {alpha_1 short + alpha_2 long : alpha in [0,1]^2}.
  Polygon rectangle() const;
};

/// One piece of the planar dissection. `in_rect` is the intersection of the
/// rectangle with the square translated by -uB; `in_square` is the same
/// polygon moved back by +uB.
struct Piece2D {
  std::array<std::int64_t, 2> u{};
  Polygon in_rect;
  Polygon in_square;
};

/// Lattice whose rectangle realization has sides a and 1/a: beta = sqrt(a^2-1).
/// Throws InvalidAspect unless a >= 1 and finite.
Lattice2D montucla_lattice(double a);

/// Pieces of the square-to-rectangle dissection for aspect a >= 1, sorted by
/// label. Slivers with area below 1e-12 are dropped.
std::vector<Piece2D> enumerate_pieces(double a);

/// 2 + ceil(sqrt(a^2 - 1)).
std::size_t piece_count_bound(double a);
/// ceil(a) + 2.
std::size_t piece_count_bound_loose(double a);

double polygon_area(const Polygon& poly);

/// Keeps the part of a convex polygon with nx*x + ny*y <= c.
Polygon clip_halfplane(const Polygon& poly, double nx, double ny, double c);

}  // namespace cubebrick

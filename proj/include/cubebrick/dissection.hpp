#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cubebrick/bidiagonal.hpp"
#include "cubebrick/brick_spec.hpp"
#include "cubebrick/dense_matrix.hpp"

namespace cubebrick {

/// Cells are half-open: a coordinate t is assigned to cell floor(t + kCellSnap)
/// and the fractional part is clamped at zero.
inline constexpr double kCellSnap = 1e-12;
/// Slack accepted on input points lying just outside their domain.
inline constexpr double kDomainSlack = 1e-12;

/// Image of a cube point under the dissection.
struct DissectionImage {
  std::vector<double> y;         // point of the brick realization, sorted axes
  std::vector<std::int64_t> u;   // lattice coordinates, identifies the piece
  std::vector<double> alpha;     // coordinates of y in the basis r_1..r_n
  std::vector<double> c;         // canonical brick point, user axis order
};

/// Preimage of a brick point: a cube point (sorted axes) and its piece label.
struct CubeImage {
  std::vector<double> x;
  std::vector<std::int64_t> u;
};

/// Caller-provided output buffers for the allocation-free forward map.
/// Every span has the dimension of the spec.
struct ForwardBuffers {
  std::span<double> y;
  std::span<std::int64_t> u;
  std::span<double> alpha;
  std::span<double> c;
};

/// Rows r_1..r_n of the orthogonal brick realization R = A^-1 B.
struct OrthogonalRealization {
  DenseMatrix rows;
  std::vector<double> norms;
};

/// Dense R built from the bidiagonal recurrence r_i = b_i - A(i,i+1) r_{i+1}.
/// O(n^2); meant for verification and small n, not the mapping fast path.
OrthogonalRealization build_realization(const BrickSpec& spec);

/// Precomputed cube-to-brick dissection for one brick. Immutable, so one
/// instance may be shared between threads. All maps are O(n).
class Dissection {
 public:
  explicit Dissection(BrickSpec spec);

  const BrickSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return spec_.dim(); }
  const BidiagonalLower& generator() const noexcept { return b_; }
  const BidiagonalUpper& gs_coefficients() const noexcept { return a_; }

  /// Forward map. `x` is a cube point in sorted axis order.
  /// Throws OutOfDomain, DimensionMismatch or PrecisionExceeded.
  DissectionImage cube_to_brick(std::span<const double> x) const;
  void cube_to_brick(std::span<const double> x, const ForwardBuffers& out) const;

  /// Inverse map. `c` is a canonical brick point in user axis order; the
  /// returned cube point is in sorted axis order.
  CubeImage brick_to_cube(std::span<const double> c) const;

  /// Coordinates alpha of a realization point y = sum alpha_j r_j.
  std::vector<double> canonical_from_realization(std::span<const double> y) const;

 private:
  BrickSpec spec_;
  BidiagonalLower b_;
  BidiagonalUpper a_;
};

/// Carries a canonical point of `src` (user axes) to the corresponding
/// canonical point of `dst` (user axes) through the unit cube.
std::vector<double> brick_to_brick(std::span<const double> c, const Dissection& src,
                                   const Dissection& dst);

}  // namespace cubebrick

#include "cubebrick/dissection.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "cubebrick/error.hpp"

namespace cubebrick {
namespace {

// Beyond 2^52 a double no longer resolves the fractional part of a cell
// coordinate, so the piece label cannot be represented.
constexpr double kMaxCellCoordinate = 4503599627370496.0;

// Slack for points handed back to the inverse maps. These usually come from a
// previous forward map, possibly printed with 12 significant digits.
constexpr double kRealizationSlack = 1e-9;

void check_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    std::ostringstream os;
    os << what << " has dimension " << got << ", expected " << want;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

// floor with the half-open cell convention; returns the integer cell index
// as a double and stores the fractional part (clamped into [0, 1)).
double cell_floor(double t, double& frac) {
  if (!(std::abs(t) < kMaxCellCoordinate)) {
    throw Error(ErrorCode::PrecisionExceeded,
                "lattice coordinate exceeds double precision; brick is too eccentric");
  }
  const double fl = std::floor(t + kCellSnap);
  const double f = t - fl;
  frac = f < 0.0 ? 0.0 : f;
  return fl;
}

}  // namespace

OrthogonalRealization build_realization(const BrickSpec& spec) {
  const std::size_t n = spec.dim();
  const BidiagonalLower b = build_generator(spec);
  const BidiagonalUpper a = build_gs_coefficients(spec);

  OrthogonalRealization out{DenseMatrix(n), std::vector<double>(n)};
  DenseMatrix& r = out.rows;
  for (std::size_t i = n; i-- > 0;) {
    r(i, i) = 1.0;
    if (i > 0) r(i, i - 1) = b.sub[i - 1];
    if (i + 1 < n) {
      for (std::size_t k = i; k < n; ++k) r(i, k) -= a.sup[i] * r(i + 1, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double v : r.row(i)) s += v * v;
    out.norms[i] = std::sqrt(s);
  }
  return out;
}

Dissection::Dissection(BrickSpec spec)
    : spec_(std::move(spec)), b_(build_generator(spec_)), a_(build_gs_coefficients(spec_)) {}

DissectionImage Dissection::cube_to_brick(std::span<const double> x) const {
  const std::size_t n = dim();
  DissectionImage img{std::vector<double>(n), std::vector<std::int64_t>(n),
                      std::vector<double>(n), std::vector<double>(n)};
  cube_to_brick(x, ForwardBuffers{img.y, img.u, img.alpha, img.c});
  return img;
}

void Dissection::cube_to_brick(std::span<const double> x, const ForwardBuffers& out) const {
  const std::size_t n = dim();
  check_dim(x.size(), n, "cube point");
  if (out.y.size() != n || out.u.size() != n || out.alpha.size() != n || out.c.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "output buffers do not match the brick dimension");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] >= -kDomainSlack && x[i] <= 1.0 + kDomainSlack)) {
      // Numbered by the user's axis, which is what callers of the CLI see.
      std::ostringstream os;
      os << "coordinate " << spec_.perm()[i] + 1 << " (" << x[i] << ") is out of [0,1]";
      throw Error(ErrorCode::OutOfDomain, os.str());
    }
  }

  // z B = x, stored in y; then x_bar = z A, stored in alpha.
  solve_lower(b_, x, out.y);
  mul_upper(a_, out.y, out.alpha);

  // Pick u so that x_bar - u A lands in [0,1)^n: (uA)_i = u_i + u_{i-1} A(i-1,i).
  const auto& sup = a_.sup;
  for (std::size_t i = 0; i < n; ++i) {
    double t = out.alpha[i];
    if (i > 0) t -= static_cast<double>(out.u[i - 1]) * sup[i - 1];
    double frac;
    out.u[i] = static_cast<std::int64_t>(cell_floor(t, frac));
    out.alpha[i] = frac;
  }

  // y = x - u B
  const auto& sub = b_.sub;
  for (std::size_t j = 0; j < n; ++j) {
    double ub = static_cast<double>(out.u[j]);
    if (j + 1 < n) ub += static_cast<double>(out.u[j + 1]) * sub[j];
    out.y[j] = x[j] - ub;
  }

  const auto& len = spec_.lengths();
  const auto& perm = spec_.perm();
  for (std::size_t i = 0; i < n; ++i) out.c[perm[i]] = out.alpha[i] * len[i];
}

CubeImage Dissection::brick_to_cube(std::span<const double> c) const {
  const std::size_t n = dim();
  check_dim(c.size(), n, "brick point");
  const auto& len = spec_.lengths();
  const auto& perm = spec_.perm();

  std::vector<double> alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ci = c[perm[i]];
    if (!(ci >= -kRealizationSlack * len[i] && ci <= len[i] * (1.0 + kRealizationSlack))) {
      std::ostringstream os;
      os << "coordinate " << perm[i] + 1 << " (" << ci << ") is out of [0," << len[i] << "]";
      throw Error(ErrorCode::OutOfDomain, os.str());
    }
    alpha[i] = ci / len[i];
  }

  // y = alpha R = (alpha A^-1) B
  const std::vector<double> y = mul_lower(b_, solve_upper(a_, alpha));

  // Find u with y + u B in [0,1)^n, last coordinate first.
  CubeImage out{std::vector<double>(n), std::vector<std::int64_t>(n)};
  for (std::size_t j = n; j-- > 0;) {
    double s = y[j];
    if (j + 1 < n) s += static_cast<double>(out.u[j + 1]) * b_.sub[j];
    double frac;
    out.u[j] = -static_cast<std::int64_t>(cell_floor(s, frac));
    out.x[j] = frac;
  }
  return out;
}

std::vector<double> Dissection::canonical_from_realization(std::span<const double> y) const {
  check_dim(y.size(), dim(), "realization point");
  std::vector<double> alpha = mul_upper(a_, solve_lower(b_, y));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] >= -kRealizationSlack && alpha[i] <= 1.0 + kRealizationSlack)) {
      std::ostringstream os;
      os << "point is outside the brick realization (alpha_" << i + 1 << " = " << alpha[i]
         << ")";
      throw Error(ErrorCode::OutOfDomain, os.str());
    }
  }
  return alpha;
}

std::vector<double> brick_to_brick(std::span<const double> c, const Dissection& src,
                                   const Dissection& dst) {
  if (src.dim() != dst.dim()) {
    std::ostringstream os;
    os << "source brick has dimension " << src.dim() << ", target has " << dst.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const std::size_t n = src.dim();
  const CubeImage cube = src.brick_to_cube(c);
  std::vector<double> user(n), sorted(n);
  src.spec().to_user(cube.x, user);
  dst.spec().to_sorted(user, sorted);
  return dst.cube_to_brick(sorted).c;
}

}  // namespace cubebrick

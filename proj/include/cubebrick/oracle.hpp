#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cubebrick/brick_spec.hpp"
#include "cubebrick/dense_matrix.hpp"

// Slow reference implementation of the dissection: dense matrices, textbook
// Gram-Schmidt and brute-force lattice search. Shares no code path with the
// bidiagonal fast path and exists to check it.
namespace cubebrick::oracle {

/// B evaluated entry by entry from plain suffix products.
DenseMatrix dense_generator(const BrickSpec& spec);

struct GramSchmidt {
  DenseMatrix r;  // orthogonal rows
  DenseMatrix a;  // unit upper triangular coefficients, b = a r
};

/// Classical Gram-Schmidt on the rows of b, from the last row upwards:
///   r_n = b_n,  r_i = b_i - sum_{j>i} <b_i,r_j>/<r_j,r_j> r_j.
/// Throws SingularMatrix if a row becomes (numerically) zero.
GramSchmidt dense_gram_schmidt(const DenseMatrix& b);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
DenseMatrix dense_inverse(const DenseMatrix& m);

/// Inclusive per-coordinate bounds for an integer search.
struct SearchBox {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  static SearchBox uniform(std::size_t n, std::int64_t radius);
  /// Number of lattice points in the box (saturates at INT64_MAX).
  std::int64_t volume() const;
};

struct Image {
  std::vector<std::int64_t> u;
  std::vector<double> y;
  std::vector<double> alpha;
};

/// Dense model of one brick: B, its Gram-Schmidt factors and the inverses
/// needed to test candidate translations.
class DenseDissection {
 public:
  static constexpr std::size_t kMaxDim = 4;
  static constexpr std::int64_t kMaxCandidates = 50'000'000;

  explicit DenseDissection(const BrickSpec& spec);

  const DenseMatrix& generator() const noexcept { return b_; }
  const GramSchmidt& factors() const noexcept { return gs_; }

  /// Box guaranteed to contain every label u = (x - y) B^-1 with x in the
  /// unit cube and y in the brick realization.
  SearchBox piece_box() const;

  /// alpha = (x - u B) R^-1.
  std::vector<double> alpha_of(std::span<const double> x, std::span<const std::int64_t> u) const;

  /// All u in the box with alpha(x - uB) in the half-open unit cell.
  std::vector<std::vector<std::int64_t>> matching_labels(std::span<const double> x,
                                                         const SearchBox& box) const;

  /// The unique matching label. Throws NotFound if the box misses it.
  Image search(std::span<const double> x, const SearchBox& box) const;

  /// All u in a box around y with y - uB in [0,1)^n (cube tiling).
  std::vector<std::vector<std::int64_t>> cube_decompositions(std::span<const double> y) const;

 private:
  std::size_t n_;
  DenseMatrix b_;
  GramSchmidt gs_;
  DenseMatrix b_inv_;
  DenseMatrix r_inv_;
};

/// Brute-force search for the piece containing x over ||u||_inf <= radius.
/// Requires dim <= 4; throws NotFound when the radius is too small.
std::vector<std::int64_t> exhaustive_piece_search(std::span<const double> x,
                                                  const BrickSpec& spec, std::int64_t radius);

}  // namespace cubebrick::oracle

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubebrick/brick_spec.hpp"

namespace cubebrick {

/// Lower bidiagonal matrix with unit diagonal, stored as its subdiagonal.
/// sub[j] is the entry at row j+1, column j (zero-based). This is the
/// lattice generator B; lattice points are the row combinations uB.
struct BidiagonalLower {
  std::vector<double> sub;

  std::size_t dim() const noexcept { return sub.size() + 1; }
};

/// Upper bidiagonal matrix with unit diagonal, stored as its superdiagonal.
/// sup[i] is the entry at row i, column i+1. This is the Gram-Schmidt
/// coefficient matrix A with B = A R.
struct BidiagonalUpper {
  std::vector<double> sup;

  std::size_t dim() const noexcept { return sup.size() + 1; }
};

/// Builds B for the sorted lengths of `spec`:
///   B(i, i-1) = sqrt(P_i^2 - 1) / P_{i+1},   P_i = a_i * ... * a_n.
BidiagonalLower build_generator(const BrickSpec& spec);

/// Builds A for the sorted lengths of `spec`:
///   A(i, i+1) = sqrt(P_{i+1}^2 - 1) / (a_{i+1} P_{i+1}).
BidiagonalUpper build_gs_coefficients(const BrickSpec& spec);

/// Solves z B = x (row-vector convention) by backward substitution.
std::vector<double> solve_lower(const BidiagonalLower& b, std::span<const double> x);
void solve_lower(const BidiagonalLower& b, std::span<const double> x, std::span<double> z);

/// Returns z A.
std::vector<double> mul_upper(const BidiagonalUpper& a, std::span<const double> z);
void mul_upper(const BidiagonalUpper& a, std::span<const double> z, std::span<double> out);

/// Returns w B.
std::vector<double> mul_lower(const BidiagonalLower& b, std::span<const double> w);

/// Solves w A = alpha by forward substitution.
std::vector<double> solve_upper(const BidiagonalUpper& a, std::span<const double> alpha);

}  // namespace cubebrick

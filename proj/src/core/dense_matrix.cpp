#include "cubebrick/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace cubebrick {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  const std::size_t n = lhs.dim();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double l = lhs(i, k);
      if (l == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

std::vector<double> row_times(std::span<const double> v, const DenseMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  double d = 0.0;
  for (std::size_t i = 0; i < lhs.data().size(); ++i) {
    d = std::max(d, std::abs(lhs.data()[i] - rhs.data()[i]));
  }
  return d;
}

}  // namespace cubebrick

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cubebrick {

/// Square row-major matrix. Points are row vectors multiplied on the left.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);

/// Returns v M.
std::vector<double> row_times(std::span<const double> v, const DenseMatrix& m);

double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs);

}  // namespace cubebrick

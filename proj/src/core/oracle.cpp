#include "cubebrick/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cubebrick/dissection.hpp"
#include "cubebrick/error.hpp"

namespace cubebrick::oracle {
namespace {

double dot(std::span<const double> l, std::span<const double> r) {
  double s = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) s += l[i] * r[i];
  return s;
}

bool in_cell(double t) { return t >= -kCellSnap && t < 1.0 - kCellSnap; }

// Visits every integer point of the box; stops early when fn returns false.
template <typename Fn>
void for_each_in_box(const SearchBox& box, Fn&& fn) {
  const std::size_t n = box.lo.size();
  std::vector<std::int64_t> u = box.lo;
  for (std::size_t i = 0; i < n; ++i) {
    if (box.lo[i] > box.hi[i]) return;
  }
  while (true) {
    if (!fn(static_cast<const std::vector<std::int64_t>&>(u))) return;
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (u[i] < box.hi[i]) {
        ++u[i];
        break;
      }
      u[i] = box.lo[i];
    }
    if (i == n) return;
  }
}

void check_box(const SearchBox& box) {
  if (box.volume() > DenseDissection::kMaxCandidates) {
    throw Error(ErrorCode::InvalidArgument, "exhaustive search box is too large");
  }
}

}  // namespace

DenseMatrix dense_generator(const BrickSpec& spec) {
  const auto& a = spec.lengths();
  const std::size_t n = a.size();
  auto suffix = [&](std::size_t from) {
    double p = 1.0;
    for (std::size_t k = from; k < n; ++k) p *= a[k];
    return p;
  };
  DenseMatrix b = DenseMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) {
    const double p = suffix(i);
    b(i, i - 1) = std::sqrt(std::max(0.0, p * p - 1.0)) / suffix(i + 1);
  }
  return b;
}

GramSchmidt dense_gram_schmidt(const DenseMatrix& b) {
  const std::size_t n = b.dim();
  GramSchmidt gs{b, DenseMatrix::identity(n)};
  std::vector<double> rr(n);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double coef = dot(b.row(i), gs.r.row(j)) / rr[j];
      gs.a(i, j) = coef;
      auto ri = gs.r.row(i);
      auto rj = gs.r.row(j);
      for (std::size_t k = 0; k < n; ++k) ri[k] -= coef * rj[k];
    }
    rr[i] = dot(gs.r.row(i), gs.r.row(i));
    if (!(rr[i] > 1e-300)) throw Error(ErrorCode::SingularMatrix, "rows are linearly dependent");
  }
  return gs;
}

DenseMatrix dense_inverse(const DenseMatrix& m) {
  const std::size_t n = m.dim();
  DenseMatrix work = m;
  DenseMatrix inv = DenseMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(piv, col))) piv = r;
    }
    if (!(std::abs(work(piv, col)) > 1e-300)) {
      throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    }
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(work(piv, k), work(col, k));
        std::swap(inv(piv, k), inv(col, k));
      }
    }
    const double d = work(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      work(col, k) /= d;
      inv(col, k) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = work(r, col);
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        work(r, k) -= f * work(col, k);
        inv(r, k) -= f * inv(col, k);
      }
    }
  }
  return inv;
}

SearchBox SearchBox::uniform(std::size_t n, std::int64_t radius) {
  return SearchBox{std::vector<std::int64_t>(n, -radius), std::vector<std::int64_t>(n, radius)};
}

std::int64_t SearchBox::volume() const {
  std::int64_t v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const std::int64_t w = hi[i] - lo[i] + 1;
    if (w <= 0) return 0;
    if (v > std::numeric_limits<std::int64_t>::max() / w) {
      return std::numeric_limits<std::int64_t>::max();
    }
    v *= w;
  }
  return v;
}

DenseDissection::DenseDissection(const BrickSpec& spec)
    : n_(spec.dim()),
      b_(dense_generator(spec)),
      gs_(dense_gram_schmidt(b_)),
      b_inv_(dense_inverse(b_)),
      r_inv_(dense_inverse(gs_.r)) {}

SearchBox DenseDissection::piece_box() const {
  // u = x B^-1 - alpha (R B^-1), x and alpha ranging over [0,1]^n.
  const DenseMatrix m = gs_.r * b_inv_;
  SearchBox box{std::vector<std::int64_t>(n_), std::vector<std::int64_t>(n_)};
  for (std::size_t j = 0; j < n_; ++j) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      lo += std::min(0.0, b_inv_(k, j)) - std::max(0.0, m(k, j));
      hi += std::max(0.0, b_inv_(k, j)) - std::min(0.0, m(k, j));
    }
    box.lo[j] = static_cast<std::int64_t>(std::floor(lo)) - 1;
    box.hi[j] = static_cast<std::int64_t>(std::ceil(hi)) + 1;
  }
  return box;
}

std::vector<double> DenseDissection::alpha_of(std::span<const double> x,
                                              std::span<const std::int64_t> u) const {
  std::vector<double> y(x.begin(), x.end());
  for (std::size_t i = 0; i < n_; ++i) {
    const double ui = static_cast<double>(u[i]);
    for (std::size_t k = 0; k < n_; ++k) y[k] -= ui * b_(i, k);
  }
  return row_times(y, r_inv_);
}

std::vector<std::vector<std::int64_t>> DenseDissection::matching_labels(
    std::span<const double> x, const SearchBox& box) const {
  if (n_ > kMaxDim) throw Error(ErrorCode::InvalidArgument, "exhaustive search needs n <= 4");
  check_box(box);
  std::vector<std::vector<std::int64_t>> found;
  for_each_in_box(box, [&](const std::vector<std::int64_t>& u) {
    const auto alpha = alpha_of(x, u);
    if (std::all_of(alpha.begin(), alpha.end(), in_cell)) found.push_back(u);
    return true;
  });
  return found;
}

Image DenseDissection::search(std::span<const double> x, const SearchBox& box) const {
  if (n_ > kMaxDim) throw Error(ErrorCode::InvalidArgument, "exhaustive search needs n <= 4");
  check_box(box);
  Image img;
  for_each_in_box(box, [&](const std::vector<std::int64_t>& u) {
    auto alpha = alpha_of(x, u);
    if (!std::all_of(alpha.begin(), alpha.end(), in_cell)) return true;
    img.u = u;
    img.alpha = std::move(alpha);
    return false;
  });
  if (img.u.empty()) throw Error(ErrorCode::NotFound, "no lattice translation in search box");
  img.y.assign(x.begin(), x.end());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) img.y[k] -= static_cast<double>(img.u[i]) * b_(i, k);
  }
  return img;
}

std::vector<std::vector<std::int64_t>> DenseDissection::cube_decompositions(
    std::span<const double> y) const {
  if (n_ > kMaxDim) throw Error(ErrorCode::InvalidArgument, "exhaustive search needs n <= 4");
  // u = (y - x) B^-1 with x in [0,1]^n.
  const auto centre = row_times(y, b_inv_);
  SearchBox box{std::vector<std::int64_t>(n_), std::vector<std::int64_t>(n_)};
  for (std::size_t j = 0; j < n_; ++j) {
    double lo = centre[j], hi = centre[j];
    for (std::size_t k = 0; k < n_; ++k) {
      lo -= std::max(0.0, b_inv_(k, j));
      hi -= std::min(0.0, b_inv_(k, j));
    }
    box.lo[j] = static_cast<std::int64_t>(std::floor(lo)) - 1;
    box.hi[j] = static_cast<std::int64_t>(std::ceil(hi)) + 1;
  }
  check_box(box);
  std::vector<std::vector<std::int64_t>> found;
  for_each_in_box(box, [&](const std::vector<std::int64_t>& u) {
    bool inside = true;
    for (std::size_t k = 0; k < n_ && inside; ++k) {
      double xk = y[k];
      for (std::size_t i = 0; i < n_; ++i) xk -= static_cast<double>(u[i]) * b_(i, k);
      inside = xk >= 0.0 && xk < 1.0;
    }
    if (inside) found.push_back(u);
    return true;
  });
  return found;
}

std::vector<std::int64_t> exhaustive_piece_search(std::span<const double> x,
                                                  const BrickSpec& spec, std::int64_t radius) {
  if (x.size() != spec.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match the brick");
  }
  const DenseDissection dense(spec);
  return dense.search(x, SearchBox::uniform(spec.dim(), radius)).u;
}

}  // namespace cubebrick::oracle

#include "cubebrick/bidiagonal.hpp"

#include <cmath>

namespace cubebrick {
namespace {

constexpr double kLogDomainThreshold = 1e150;

// g_i = sqrt(P_i^2 - 1) / P_i for i = 2..n (zero-based 1..n-1), where P_i is
// the suffix product of the sorted lengths. Both B and A are a_i * g_i and
// g_i / a_i respectively, so this is the only place square roots are taken.
std::vector<double> suffix_shear(const std::vector<double>& lengths) {
  const std::size_t n = lengths.size();
  std::vector<double> g(n > 0 ? n - 1 : 0, 0.0);
  double p = 1.0;
  double log_p = 0.0;
  for (std::size_t i = n; i-- > 1;) {
    p *= lengths[i];
    log_p += std::log(lengths[i]);
    double gi;
    if (!std::isfinite(p) || p > kLogDomainThreshold) {
      gi = std::sqrt(-std::expm1(-2.0 * log_p));
    } else if (p <= 1.0) {
      gi = 0.0;  // rounding residue of P^2 - 1 < 0
    } else {
      gi = std::sqrt((p - 1.0) * (p + 1.0)) / p;
    }
    g[i - 1] = gi;
  }
  return g;
}

}  // namespace

BidiagonalLower build_generator(const BrickSpec& spec) {
  const auto& a = spec.lengths();
  BidiagonalLower b;
  b.sub = suffix_shear(a);
  for (std::size_t j = 0; j < b.sub.size(); ++j) b.sub[j] *= a[j + 1];
  return b;
}

BidiagonalUpper build_gs_coefficients(const BrickSpec& spec) {
  const auto& a = spec.lengths();
  BidiagonalUpper m;
  m.sup = suffix_shear(a);
  for (std::size_t i = 0; i < m.sup.size(); ++i) m.sup[i] /= a[i + 1];
  return m;
}

void solve_lower(const BidiagonalLower& b, std::span<const double> x, std::span<double> z) {
  const std::size_t n = x.size();
  z[n - 1] = x[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) z[j] = x[j] - z[j + 1] * b.sub[j];
}

std::vector<double> solve_lower(const BidiagonalLower& b, std::span<const double> x) {
  std::vector<double> z(x.size());
  if (!x.empty()) solve_lower(b, x, z);
  return z;
}

void mul_upper(const BidiagonalUpper& a, std::span<const double> z, std::span<double> out) {
  const std::size_t n = z.size();
  // Walk backwards so that out may alias z.
  for (std::size_t j = n; j-- > 1;) out[j] = z[j] + z[j - 1] * a.sup[j - 1];
  if (n > 0) out[0] = z[0];
}

std::vector<double> mul_upper(const BidiagonalUpper& a, std::span<const double> z) {
  std::vector<double> out(z.size());
  mul_upper(a, z, out);
  return out;
}

std::vector<double> mul_lower(const BidiagonalLower& b, std::span<const double> w) {
  const std::size_t n = w.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j + 1 < n; ++j) out[j] = w[j] + w[j + 1] * b.sub[j];
  if (n > 0) out[n - 1] = w[n - 1];
  return out;
}

std::vector<double> solve_upper(const BidiagonalUpper& a, std::span<const double> alpha) {
  const std::size_t n = alpha.size();
  std::vector<double> w(n);
  if (n == 0) return w;
  w[0] = alpha[0];
  for (std::size_t j = 1; j < n; ++j) w[j] = alpha[j] - w[j - 1] * a.sup[j - 1];
  return w;
}

}  // namespace cubebrick

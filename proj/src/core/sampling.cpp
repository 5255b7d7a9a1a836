#include "cubebrick/sampling.hpp"

#include <cmath>

#include "cubebrick/brick_spec.hpp"

namespace cubebrick {

std::vector<double> random_unit_lengths(std::size_t n, double log_mass, Rng& rng) {
  std::vector<double> g(n);
  double mean = 0.0;
  for (double& v : g) {
    v = 2.0 * uniform01(rng) - 1.0;
    mean += v;
  }
  mean /= static_cast<double>(n);
  double positive = 0.0;
  for (double& v : g) {
    v -= mean;
    if (v > 0.0) positive += v;
  }
  const double scale = positive > 0.0 ? log_mass / positive : 0.0;
  for (double& v : g) v = std::exp(v * scale);
  return normalize_volume(g);
}

std::vector<double> random_cube_point(std::size_t n, Rng& rng) {
  std::vector<double> x(n);
  for (double& v : x) v = uniform01(rng);
  return x;
}

}  // namespace cubebrick

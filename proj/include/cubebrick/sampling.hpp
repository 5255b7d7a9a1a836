#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace cubebrick {

using Rng = std::mt19937_64;

/// Uniform double in [0,1) from the top 53 bits; identical on every platform.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Random unit-volume side lengths in random axis order, "log-volume balanced":
/// log a_k are centred uniform draws rescaled so the logs of the lengths
/// above one sum to `log_mass`. Hence every suffix product of the sorted
/// lengths stays below exp(log_mass), which bounds the lattice labels.
std::vector<double> random_unit_lengths(std::size_t n, double log_mass, Rng& rng);

std::vector<double> random_cube_point(std::size_t n, Rng& rng);

}  // namespace cubebrick

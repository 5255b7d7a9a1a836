#pragma once

#include <cstddef>
#include <vector>

namespace cubebrick {

/// One-sample Kolmogorov-Smirnov statistic against Uniform[0,1].
double ks_statistic_uniform(std::vector<double> samples);

/// Asymptotic p-value P(D_n > d) of the Kolmogorov distribution, with the
/// usual finite-sample correction of the scaling factor.
double ks_pvalue(double d, std::size_t n);

}  // namespace cubebrick

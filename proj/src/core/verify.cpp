#include "cubebrick/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cubebrick/dissection.hpp"
#include "cubebrick/oracle.hpp"
#include "cubebrick/sampling.hpp"
#include "cubebrick/stats.hpp"

namespace cubebrick {
namespace {

constexpr double kLogMass = 1.3862943611198906;  // ln 4
constexpr double kKsSignificance = 0.01;

std::string describe(double value, double limit) {
  std::ostringstream os;
  os.precision(3);
  os << "max " << value << " (limit " << limit << ")";
  return os.str();
}

class Checker {
 public:
  Checker(const VerifyOptions& opt, const Dissection& d) : opt_(opt), d_(d) {}

  DissectionImage forward(std::span<const double> x) const {
    DissectionImage img = d_.cube_to_brick(x);
    if (opt_.inject_fault) {
      img.c[0] += 1e-6;
      img.alpha[0] += 1e-6;
      img.y[0] += 1e-6;
    }
    return img;
  }

  SuiteResult round_trip(Rng& rng) const {
    const std::size_t n = d_.dim();
    const double limit = 1e-9 * static_cast<double>(n);
    double worst = 0.0;
    for (std::size_t t = 0; t < opt_.trials; ++t) {
      const auto x = random_cube_point(n, rng);
      const auto back = d_.brick_to_cube(forward(x).c);
      for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(back.x[i] - x[i]));
    }
    return {"round-trip", worst <= limit, describe(worst, limit)};
  }

  SuiteResult oracle_equivalence(Rng& rng) const {
    const std::size_t n = d_.dim();
    if (n > oracle::DenseDissection::kMaxDim) return {"oracle-equivalence", true, "skipped (n > 4)"};
    const oracle::DenseDissection dense(d_.spec());
    const oracle::SearchBox box = dense.piece_box();
    const std::size_t points = std::min<std::size_t>(opt_.trials, 2000);
    double worst = 0.0;
    std::size_t label_mismatch = 0;
    for (std::size_t t = 0; t < points; ++t) {
      const auto x = random_cube_point(n, rng);
      const auto fast = forward(x);
      const auto slow = dense.search(x, box);
      if (fast.u != slow.u) {
        ++label_mismatch;
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max({worst, std::abs(fast.y[i] - slow.y[i]),
                          std::abs(fast.alpha[i] - slow.alpha[i])});
      }
    }
    std::ostringstream os;
    os << points << " points, " << label_mismatch << " label mismatches, " << describe(worst, 1e-9);
    return {"oracle-equivalence", label_mismatch == 0 && worst <= 1e-9, os.str()};
  }

  SuiteResult realization() const {
    const std::size_t n = d_.dim();
    if (n > 64) return {"realization-norms", true, "skipped (n > 64)"};
    const auto real = build_realization(d_.spec());
    const auto& len = d_.spec().lengths();
    double norm_err = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      norm_err = std::max(norm_err, std::abs(real.norms[j] - len[j]) / len[j]);
    }
    DenseMatrix a = DenseMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = d_.gs_coefficients().sup[i];
    DenseMatrix b = DenseMatrix::identity(n);
    for (std::size_t i = 1; i < n; ++i) b(i, i - 1) = d_.generator().sub[i - 1];
    const double fact_err = max_abs_diff(a * real.rows, b);
    std::ostringstream os;
    os << "norms " << describe(norm_err, 1e-9) << "; A*R-B " << describe(fact_err, 1e-9);
    return {"realization-norms", norm_err <= 1e-9 && fact_err <= 1e-9, os.str()};
  }

  SuiteResult uniformity(Rng& rng) const {
    const std::size_t n = d_.dim();
    std::vector<std::vector<double>> coords(n);
    for (auto& c : coords) c.reserve(opt_.trials);
    const auto& len = d_.spec().lengths_input();
    for (std::size_t t = 0; t < opt_.trials; ++t) {
      const auto img = forward(random_cube_point(n, rng));
      for (std::size_t j = 0; j < n; ++j) coords[j].push_back(img.c[j] / len[j]);
    }
    double min_p = 1.0;
    for (auto& c : coords) {
      const double d = ks_statistic_uniform(std::move(c));
      min_p = std::min(min_p, ks_pvalue(d, opt_.trials));
    }
    // Bonferroni over the n coordinates keeps the family-wise level at 1%.
    const double level = kKsSignificance / static_cast<double>(n);
    std::ostringstream os;
    os.precision(3);
    os << "min p-value " << min_p << " (significance " << level << " per coordinate)";
    return {"ks-uniformity", min_p >= level, os.str()};
  }

 private:
  const VerifyOptions& opt_;
  const Dissection& d_;
};

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  Rng rng(options.seed);
  const Dissection d(BrickSpec::make(random_unit_lengths(options.n, kLogMass, rng)));
  const Checker check(options, d);
  std::vector<SuiteResult> out;
  out.push_back(check.round_trip(rng));
  out.push_back(check.oracle_equivalence(rng));
  out.push_back(check.realization());
  out.push_back(check.uniformity(rng));
  return out;
}

}  // namespace cubebrick

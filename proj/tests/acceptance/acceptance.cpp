// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when a criterion fails that was not listed with --expect-fail, or when a
// listed one unexpectedly passes.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubebrick/bidiagonal.hpp"
#include "cubebrick/dissection.hpp"
#include "cubebrick/error.hpp"
#include "cubebrick/montucla2d.hpp"
#include "cubebrick/oracle.hpp"
#include "cubebrick/sampling.hpp"
#include "cubebrick/stats.hpp"

using namespace cubebrick;

namespace {

using Clock = std::chrono::steady_clock;

const double kLogMass = std::log(4.0);

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double max_diff(std::span<const double> l, std::span<const double> r) {
  double d = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) d = std::max(d, std::abs(l[i] - r[i]));
  return d;
}

Outcome round_trip() {
  const auto t0 = Clock::now();
  Rng rng(101);
  bool ok = true;
  std::ostringstream os;
  for (std::size_t n : {1, 2, 3, 8, 64, 1024}) {
    const Dissection d(BrickSpec::make(random_unit_lengths(n, kLogMass, rng)));
    std::vector<double> x(n), y(n), alpha(n), c(n);
    std::vector<std::int64_t> u(n);
    double worst = 0.0;
    bool labels = true;
    for (int p = 0; p < 100000; ++p) {
      for (double& v : x) v = uniform01(rng);
      d.cube_to_brick(x, ForwardBuffers{y, u, alpha, c});
      const auto back = d.brick_to_cube(c);
      worst = std::max(worst, max_diff(back.x, x));
      labels = labels && back.u == u;
    }
    const double tol = 1e-9 * static_cast<double>(n);
    ok = ok && labels && worst <= tol;
    os << "n=" << n << ":" << sci(worst) << (labels ? "" : "(label mismatch)") << " ";
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 60.0;
  os << "time=" << sci(secs) << "s";
  return {ok, os.str()};
}

Outcome oracle_equivalence() {
  Rng rng(202);
  std::size_t mismatched_u = 0;
  double worst = 0.0;
  for (std::size_t n : {2, 3, 4}) {
    for (int s = 0; s < 100; ++s) {
      const auto spec = BrickSpec::make(random_unit_lengths(n, kLogMass, rng));
      const Dissection fast(spec);
      const oracle::DenseDissection dense(spec);
      const auto box = dense.piece_box();
      for (int p = 0; p < 100; ++p) {
        const auto x = random_cube_point(n, rng);
        const auto img = fast.cube_to_brick(x);
        const auto ref = dense.search(x, box);
        if (ref.u != img.u) {
          ++mismatched_u;
          continue;
        }
        worst = std::max({worst, max_diff(ref.y, img.y), max_diff(ref.alpha, img.alpha)});
      }
    }
  }
  return {mismatched_u == 0 && worst <= 1e-9,
          "3x100 specs x 100 points, u mismatches=" + std::to_string(mismatched_u) +
              ", max |dy|,|dalpha|=" + sci(worst)};
}

Outcome realization_norms() {
  Rng rng(303);
  double norm_err = 0.0, ar_fast = 0.0, ar_dense = 0.0;
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + static_cast<std::size_t>(s) % 64;
    const auto spec = BrickSpec::make(random_unit_lengths(n, kLogMass, rng));
    const auto real = build_realization(spec);
    for (std::size_t j = 0; j < n; ++j) {
      norm_err = std::max(norm_err, std::abs(real.norms[j] - spec.lengths()[j]) / spec.lengths()[j]);
    }
    auto a = DenseMatrix::identity(n);
    const auto sup = build_gs_coefficients(spec).sup;
    for (std::size_t j = 0; j + 1 < n; ++j) a(j, j + 1) = sup[j];
    const auto b = oracle::dense_generator(spec);
    ar_fast = std::max(ar_fast, max_abs_diff(a * real.rows, b));
    ar_dense = std::max(ar_dense, max_abs_diff(a * oracle::dense_gram_schmidt(b).r, b));
  }
  return {norm_err <= 1e-9 && ar_fast <= 1e-9 && ar_dense <= 1e-9,
          "100 specs n<=64, max rel norm err=" + sci(norm_err) + ", |AR-B| closed-form R=" +
              sci(ar_fast) + ", Gram-Schmidt R=" + sci(ar_dense)};
}

bool inside(const Polygon& poly, double x, double y) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % poly.size()];
    if ((b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x) < -1e-12) return false;
  }
  return true;
}

Outcome piece_bound() {
  Rng rng(404);
  bool ok = true;
  std::ostringstream os;
  for (double a : {1.1, 1.5, std::sqrt(2.0), 2.0, 2.5, 3.0, 5.0, 10.0}) {
    const auto pieces = enumerate_pieces(a);
    const std::size_t bound = piece_count_bound(a);
    const std::size_t loose = piece_count_bound_loose(a);
    double area = 0.0;
    for (const auto& p : pieces) area += polygon_area(p.in_rect);

    const Dissection d(BrickSpec::make(std::vector<double>{1 / a, a}));
    std::set<std::array<std::int64_t, 2>> seen;
    std::size_t disagree = 0;
    for (int t = 0; t < 10000; ++t) {
      const std::vector<double> x{uniform01(rng), uniform01(rng)};
      const auto img = d.cube_to_brick(x);
      const std::array<std::int64_t, 2> u{img.u[0], img.u[1]};
      seen.insert(u);
      const auto it = std::find_if(pieces.begin(), pieces.end(),
                                   [&](const Piece2D& p) { return p.u == u; });
      if (it == pieces.end() || !inside(it->in_square, x[0], x[1])) ++disagree;
    }
    // Every piece with a non-negligible share of the square must be hit.
    std::size_t unseen = 0;
    for (const auto& p : pieces) {
      if (!seen.count(p.u) && polygon_area(p.in_rect) > 1e-3) ++unseen;
    }
    const bool here = pieces.size() <= bound && pieces.size() <= loose &&
                      std::abs(area - 1.0) <= 1e-9 && disagree == 0 && unseen == 0;
    ok = ok && here;
    os << "a=" << sci(a) << ":" << pieces.size() << "/" << bound << "/" << loose
       << (here ? "" : "!") << " ";
    if (std::abs(area - 1.0) > 1e-9) os << "(area " << sci(area) << ") ";
    if (disagree) os << "(" << disagree << " label disagreements) ";
    if (unseen) os << "(" << unseen << " unseen pieces) ";
  }
  os << "[count/bound/loose]";
  return {ok, os.str()};
}

Outcome measure_preservation() {
  Rng rng(505);
  bool ok = true;
  double min_p = 1.0;
  for (std::size_t n : {2, 3, 8}) {
    const auto lengths = random_unit_lengths(n, kLogMass, rng);
    const Dissection d(BrickSpec::make(lengths));
    std::vector<std::vector<double>> samples(n, std::vector<double>(100000));
    for (std::size_t s = 0; s < 100000; ++s) {
      const auto img = d.cube_to_brick(random_cube_point(n, rng));
      for (std::size_t j = 0; j < n; ++j) samples[j][s] = img.c[j] / lengths[j];
    }
    for (auto& col : samples) {
      const double p = ks_pvalue(ks_statistic_uniform(std::move(col)), 100000);
      min_p = std::min(min_p, p);
      ok = ok && p >= 0.01;
    }
  }
  return {ok, "13 coordinates, 1e5 samples each, min p=" + sci(min_p) + " (level 0.01)"};
}

Outcome piecewise_isometry() {
  Rng rng(606);
  double worst = 0.0;
  std::size_t pairs_total = 0;
  for (std::size_t n : {2, 3, 8}) {
    const Dissection d(BrickSpec::make(random_unit_lengths(n, kLogMass, rng)));
    std::size_t pairs = 0;
    while (pairs < 10000) {
      const auto x1 = random_cube_point(n, rng);
      // Half the pairs are close together, half are independent draws.
      std::vector<double> x2(n);
      for (std::size_t i = 0; i < n; ++i) {
        x2[i] = pairs % 2 ? uniform01(rng)
                          : std::clamp(x1[i] + 0.05 * (uniform01(rng) - 0.5), 0.0, 0.999999);
      }
      const auto i1 = d.cube_to_brick(x1);
      const auto i2 = d.cube_to_brick(x2);
      if (i1.u != i2.u) continue;
      double dx = 0.0, dc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dx += (x1[i] - x2[i]) * (x1[i] - x2[i]);
        dc += (i1.c[i] - i2.c[i]) * (i1.c[i] - i2.c[i]);
      }
      worst = std::max(worst, std::abs(std::sqrt(dx) - std::sqrt(dc)));
      ++pairs;
    }
    pairs_total += pairs;
  }
  return {worst <= 1e-9,
          std::to_string(pairs_total) + " same-piece pairs, max distortion=" + sci(worst)};
}

Outcome scaling(const std::string& cli) {
  const auto t0 = Clock::now();
  const std::string cmd = "\"" + cli + "\" bench";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "could not run " + cmd};
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  const double secs = seconds_since(t0);
  if (status != 0) return {false, "bench exited with status " + std::to_string(status)};
  const auto at = out.find("slope,");
  if (at == std::string::npos) return {false, "no slope in bench output"};
  const double slope = std::stod(out.substr(at + 6));
  std::size_t rows = 0;
  for (char ch : out) rows += ch == '\n';
  return {slope >= 0.8 && slope <= 1.3 && secs < 300.0,
          "n=2^8..2^20 (" + std::to_string(rows - 2) + " sizes), slope=" + sci(slope) +
              " (want [0.8,1.3]), time=" + sci(secs) + "s"};
}

Outcome worked_example() {
  const double r2 = std::sqrt(2.0);
  const auto spec = BrickSpec::make(std::vector<double>{1 / r2, r2});
  const std::vector<double> x{0.1, 0.9};
  const auto img = Dissection(spec).cube_to_brick(x);
  const auto ref = oracle::exhaustive_piece_search(x, spec, 3);
  const bool ok = img.u == std::vector<std::int64_t>{-1, 1} && ref == img.u &&
                  std::abs(img.c[0] - 0.141421) <= 1e-6 && std::abs(img.c[1]) <= 1e-6;
  std::ostringstream os;
  os.precision(9);
  os << "u=(" << img.u[0] << "," << img.u[1] << ") oracle u=(" << ref[0] << "," << ref[1]
     << ") c=(" << img.c[0] << "," << img.c[1] << ")";
  return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string cli = CUBEBRICK_CLI_PATH;
  std::vector<int> expect_fail;
  std::vector<int> only;
  app.add_option("--cli", cli, "Path of the command-line tool used for the benchmark");
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',');
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"round-trip bijection", round_trip},
      {"oracle equivalence", oracle_equivalence},
      {"realization norms", realization_norms},
      {"2D piece bound", piece_bound},
      {"measure preservation", measure_preservation},
      {"piecewise isometry", piecewise_isometry},
      {"O(n) scaling", [&] { return scaling(cli); }},
      {"worked 2D example", worked_example},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    const bool expected_fail =
        std::find(expect_fail.begin(), expect_fail.end(), id) != expect_fail.end();
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << id << " " << criteria[i].first
              << ": " << r.detail << (expected_fail && !r.passed ? " [known failure]" : "")
              << std::endl;
    if (r.passed == expected_fail) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}

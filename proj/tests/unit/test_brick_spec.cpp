#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "cubebrick/brick_spec.hpp"
#include "cubebrick/error.hpp"
#include "cubebrick/sampling.hpp"

using namespace cubebrick;

namespace {

ErrorCode code_of(const std::vector<double>& lengths) {
  try {
    BrickSpec::make(lengths);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("unit cube keeps identity order") {
  const auto spec = BrickSpec::make(std::vector<double>{1, 1, 1});
  CHECK(spec.dim() == 3);
  CHECK(spec.lengths() == std::vector<double>{1, 1, 1});
  CHECK(spec.perm() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("lengths are sorted ascending with the permutation recorded") {
  const double r2 = std::sqrt(2.0);
  const auto two = BrickSpec::make(std::vector<double>{r2, 1 / r2});
  CHECK(two.lengths() == std::vector<double>{1 / r2, r2});
  CHECK(two.perm() == std::vector<std::size_t>{1, 0});

  const auto three = BrickSpec::make(std::vector<double>{2, 1, 0.5});
  CHECK(three.lengths() == std::vector<double>{0.5, 1, 2});
  CHECK(three.perm() == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("axis conversions are inverse permutations") {
  const auto spec = BrickSpec::make(std::vector<double>{2, 1, 0.5});
  const std::vector<double> user{10, 20, 30};
  std::vector<double> sorted(3), back(3);
  spec.to_sorted(user, sorted);
  CHECK(sorted == std::vector<double>{30, 20, 10});
  spec.to_user(sorted, back);
  CHECK(back == user);
}

TEST_CASE("invalid lengths are rejected") {
  CHECK(code_of({1, 0}) == ErrorCode::NonPositiveLength);
  CHECK(code_of({-1, -1}) == ErrorCode::NonPositiveLength);
  CHECK(code_of({1, NAN}) == ErrorCode::NonPositiveLength);
  CHECK(code_of({INFINITY, 0.5}) == ErrorCode::NonPositiveLength);
  CHECK(code_of({}) == ErrorCode::InvalidArgument);
  CHECK(code_of({2, 2}) == ErrorCode::VolumeNotUnit);
  CHECK(code_of({2}) == ErrorCode::VolumeNotUnit);
}

TEST_CASE("volume tolerance scales with the dimension") {
  CHECK_NOTHROW(BrickSpec::make(std::vector<double>{1 + 1.5e-6, 1, 1}));
  CHECK(code_of({1 + 2.5e-6, 1}) == ErrorCode::VolumeNotUnit);
}

TEST_CASE("n = 1 accepts only the unit length") {
  CHECK_NOTHROW(BrickSpec::make(std::vector<double>{1.0}));
  CHECK(code_of({1.1}) == ErrorCode::VolumeNotUnit);
}

TEST_CASE("normalize_volume examples") {
  CHECK(normalize_volume(std::vector<double>{2, 2}) == std::vector<double>{1, 1});
  CHECK(normalize_volume(std::vector<double>{1, 1, 1}) == std::vector<double>{1, 1, 1});
  const auto four_one = normalize_volume(std::vector<double>{4, 1});
  CHECK(four_one[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(four_one[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(normalize_volume(std::vector<double>{1, -2}), Error);
}

TEST_CASE("normalize_volume: unit product, ratios preserved, accepted by make") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<double> in(n);
    for (double& a : in) a = std::exp(6.0 * uniform01(rng) - 3.0);
    const auto out = normalize_volume(in);
    double log_sum = 0.0;
    for (double a : out) log_sum += std::log(a);
    CHECK(std::abs(std::expm1(log_sum)) <= 1e-12);
    for (std::size_t i = 1; i < n; ++i) {
      CHECK(out[i] / out[0] == doctest::Approx(in[i] / in[0]).epsilon(1e-12));
    }
    const auto spec = BrickSpec::make(out);
    CHECK(std::is_sorted(spec.lengths().begin(), spec.lengths().end()));
    for (std::size_t i = 0; i < n; ++i) CHECK(spec.lengths()[i] == out[spec.perm()[i]]);
    // Suffix products of sorted unit-volume lengths never drop below one.
    double p = 1.0;
    for (std::size_t i = n; i-- > 0;) {
      p *= spec.lengths()[i];
      CHECK(p >= 1.0 - 1e-12);
    }
  }
}

#include <doctest.h>

#include "cubebrick/verify.hpp"

using namespace cubebrick;

namespace {

bool all_pass(const std::vector<SuiteResult>& r) {
  for (const auto& s : r) {
    if (!s.passed) return false;
  }
  return !r.empty();
}

}  // namespace

TEST_CASE("default self-check passes") {
  VerifyOptions opt;
  opt.trials = 2000;
  const auto r = run_verification(opt);
  CHECK(r.size() == 4);
  CHECK(all_pass(r));
}

TEST_CASE("n = 1 and large n pass") {
  for (std::size_t n : {1, 8, 128}) {
    VerifyOptions opt;
    opt.n = n;
    opt.trials = 1000;
    CAPTURE(n);
    CHECK(all_pass(run_verification(opt)));
  }
}

TEST_CASE("an injected fault is caught") {
  VerifyOptions opt;
  opt.trials = 1000;
  opt.inject_fault = true;
  const auto r = run_verification(opt);
  CHECK_FALSE(all_pass(r));
  bool round_trip_failed = false;
  for (const auto& s : r) round_trip_failed |= s.name == "round-trip" && !s.passed;
  CHECK(round_trip_failed);
}

TEST_CASE("deterministic for a seed") {
  VerifyOptions opt;
  opt.trials = 500;
  opt.seed = 9;
  const auto a = run_verification(opt);
  const auto b = run_verification(opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].detail == b[i].detail);
}

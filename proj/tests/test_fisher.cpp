#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "richness/error.hpp"
#include "richness/fisher.hpp"
#include "richness/rng.hpp"

using namespace richness;
using namespace richness::fisher;

namespace {

// Plain bisection of C - a ln(1 + N/a) over [1e-12, 1e12] in log space.
double bisection_alpha(std::uint64_t c, std::uint64_t n) {
  double lo = 1e-12;
  double hi = 1e12;
  auto g = [&](double a) { return static_cast<double>(c) - a * std::log1p(static_cast<double>(n) / a); };
  for (int i = 0; i < 2000; ++i) {
    const double mid = hi / lo > 2.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("alpha for C = 5, N = 44") {
  const auto fit = solve_alpha(5, 44, 1e-9);
  CHECK(std::abs(fit.alpha - 1.451889) < 1e-5);
  CHECK(std::abs(fit.residual) <= 1e-9);
  CHECK(fit.residual == log_series_residual(fit.alpha, 5, 44));
  CHECK(std::abs(fit.alpha - bisection_alpha(5, 44)) < 1e-8);
  CHECK(fit.c_observed == 5);
  CHECK(fit.n_observed == 44);
}

TEST_CASE("alpha with one category and a huge sample") {
  const auto fit = solve_alpha(1, 1'000'000'000);
  CHECK(fit.alpha > 0.0);
  CHECK(fit.alpha < 0.1);
  CHECK(std::abs(fit.residual) <= kDefaultTolerance);
  CHECK(std::abs(fit.alpha - bisection_alpha(1, 1'000'000'000)) < 1e-8);
}

TEST_CASE("no root when C >= N, invalid below 1") {
  CHECK_THROWS_AS(solve_alpha(44, 44), NoFiniteSolution);
  CHECK_THROWS_AS(solve_alpha(50, 44), NoFiniteSolution);
  CHECK_THROWS_AS(solve_alpha(0, 44), InvalidInput);
  CHECK_THROWS_AS(solve_alpha(5, 44, 0.0), InvalidInput);
}

TEST_CASE("residual within tolerance and agreement with bisection on a random grid") {
  Rng rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t n = 2 + rng.below(1'000'000 - 1);
    const std::uint64_t c = 1 + rng.below(n - 1);
    const auto fit = solve_alpha(c, n);
    INFO("c=" << c << " n=" << n);
    CHECK(std::abs(fit.residual) <= kDefaultTolerance);
    const double oracle = bisection_alpha(c, n);
    CHECK(std::abs(fit.alpha - oracle) <= 1e-8 * std::max(1.0, oracle));
  }
}

TEST_CASE("alpha strictly increases with C") {
  for (std::uint64_t n : {2ull, 10ull, 44ull, 1000ull, 123457ull}) {
    double previous = 0.0;
    for (std::uint64_t c = 1; c < n && c < 400; ++c) {
      const double a = solve_alpha(c, n).alpha;
      CHECK(a > previous);
      previous = a;
    }
  }
}

TEST_CASE("variance at N = 44 and in the limit") {
  const auto fit = solve_alpha(5, 44);
  CHECK(std::abs(variance_of_richness(fit, 44) - 0.938) <= 1e-3);
  CHECK(std::abs(variance_limit(fit) - 1.007) <= 1e-3);
  CHECK(std::abs(variance_limit(fit) - 1.00638) <= 1e-5);
}

TEST_CASE("variance_limit examples") {
  FisherFit fit;
  fit.alpha = 1.0 / std::numbers::ln2;
  CHECK(variance_limit(fit) == doctest::Approx(1.0).epsilon(1e-15));
  fit.alpha = 2.0;
  CHECK(variance_limit(fit) == doctest::Approx(1.3862943611198906).epsilon(1e-15));
  CHECK(std::abs(variance_of_richness(fit, 1'000'000'000'000ull) - variance_limit(fit)) < 1e-10);
}

TEST_CASE("finite-N variance converges monotonically to the limit") {
  for (auto [c, n] : {std::pair<std::uint64_t, std::uint64_t>{5, 44}, {1, 10}, {30, 100}}) {
    const auto fit = solve_alpha(c, n);
    const double limit = variance_limit(fit);
    double previous_gap = INFINITY;
    for (int k = 2; k <= 9; ++k) {
      const auto big_n = static_cast<std::uint64_t>(std::pow(10.0, k));
      const double gap = std::abs(limit - variance_of_richness(fit, big_n));
      CHECK(gap < previous_gap);
      previous_gap = gap;
    }
    CHECK(previous_gap <= 1e-6 * limit);
  }
}

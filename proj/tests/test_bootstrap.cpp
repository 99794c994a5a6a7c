#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <omp.h>
#include <vector>

#include "richness/bootstrap.hpp"
#include "richness/error.hpp"
#include "test_support.hpp"

using namespace richness;
using namespace richness::bootstrap;

namespace {

// Every one of the n^n equally likely ordered resamples; population moments.
Moments enumerate_resamples(const std::vector<std::int64_t>& counts) {
  std::vector<std::uint32_t> owner;
  for (std::uint32_t c = 0; c < counts.size(); ++c) owner.insert(owner.end(), counts[c], c);
  const std::size_t n = owner.size();
  std::vector<std::size_t> pick(n, 0);
  double sum = 0.0;
  double sum_sq = 0.0;
  double total = 0.0;
  while (true) {
    std::vector<bool> seen(counts.size(), false);
    int distinct = 0;
    for (auto p : pick) {
      if (!seen[owner[p]]) {
        seen[owner[p]] = true;
        ++distinct;
      }
    }
    sum += distinct;
    sum_sq += static_cast<double>(distinct) * distinct;
    total += 1.0;
    std::size_t pos = 0;
    while (pos < n && ++pick[pos] == n) pick[pos++] = 0;
    if (pos == n) break;
  }
  const double mean = sum / total;
  return {mean, sum_sq / total - mean * mean};
}

}  // namespace

TEST_CASE("exact moments: enumeration of the four resamples of (1,1)") {
  const auto enumerated = enumerate_resamples({1, 1});
  CHECK(enumerated.mean == 1.5);
  CHECK(enumerated.variance == 0.25);
  const auto m = bootstrap_moments_exact(testing::from_counts({1, 1}));
  CHECK(m.mean == 1.5);
  CHECK(m.variance == 0.25);
}

TEST_CASE("exact moments: counts (2,1)") {
  const auto m = bootstrap_moments_exact(testing::from_counts({2, 1}));
  CHECK(m.mean == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  const auto e = enumerate_resamples({2, 1});
  CHECK(m.mean == doctest::Approx(e.mean).epsilon(1e-14));
  CHECK(m.variance == doctest::Approx(e.variance).epsilon(1e-12));
}

TEST_CASE("exact moments agree with full enumeration on small samples") {
  const std::vector<std::vector<std::int64_t>> cases = {
      {1}, {3}, {1, 1, 1}, {2, 2}, {3, 1}, {1, 1, 1, 1}, {4, 1, 1}, {2, 2, 2}, {5, 1, 1}, {3, 2, 1, 1}};
  for (const auto& counts : cases) {
    const auto e = enumerate_resamples(counts);
    const auto m = bootstrap_moments_exact(testing::from_counts(counts));
    CHECK(m.mean == doctest::Approx(e.mean).epsilon(1e-12));
    CHECK(m.variance == doctest::Approx(e.variance).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("exact moments of the 44-flower sample") {
  const auto m = bootstrap_moments_exact(testing::table1());
  CHECK(std::abs(m.mean - 4.636275) < 1e-6);
  CHECK(std::abs(m.variance - 0.2314656) < 1e-6);
  // The singleton dominates the shortfall from 5.
  CHECK(std::abs((1.0 - std::pow(43.0 / 44.0, 44.0)) - 0.636341) < 1e-6);
}

TEST_CASE("single category: estimate 1, variance 0 for any seed") {
  const auto s = testing::from_counts({5});
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xdeadbeefull}) {
    const auto r = bootstrap_richness(s, {200, seed});
    CHECK(r.estimate == 1.0);
    CHECK(r.variance == 0.0);
  }
  CHECK(bootstrap_moments_exact(s).mean == 1.0);
  CHECK(bootstrap_moments_exact(s).variance == 0.0);
}

TEST_CASE("result is consistent with its replicate values") {
  const auto r = bootstrap_richness(testing::table1(), {});
  REQUIRE(r.replicate_values.size() == kDefaultReplicates);
  double sum = 0.0;
  for (auto v : r.replicate_values) {
    CHECK(v >= 1);
    CHECK(v <= 5);
    sum += v;
  }
  const double mean = sum / kDefaultReplicates;
  double ss = 0.0;
  for (auto v : r.replicate_values) ss += (mean - v) * (mean - v);
  CHECK(r.estimate == doctest::Approx(mean).epsilon(1e-15));
  CHECK(r.variance == doctest::Approx(ss / (kDefaultReplicates - 1)).epsilon(1e-13));
  CHECK(r.estimate >= 1.0);
  CHECK(r.estimate <= 5.0);
}

TEST_CASE("deterministic across thread counts and the serial kernel") {
  const auto s = testing::table1();
  const auto serial = bootstrap_richness(s, {500, 9}, Execution::serial);
  for (int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    const auto par = bootstrap_richness(s, {500, 9}, Execution::parallel);
    CHECK(par.replicate_values == serial.replicate_values);
    CHECK(par.estimate == serial.estimate);
    CHECK(par.variance == serial.variance);
  }
}

TEST_CASE("permutation invariance under the canonical layout") {
  const auto a = validate({{"purple", 14}, {"red", 10}, {"yellow", 10}, {"orange", 9}, {"white", 1}});
  const auto b = validate({{"white", 1}, {"yellow", 10}, {"orange", 9}, {"red", 10}, {"purple", 14}});
  const auto ra = bootstrap_richness(a, {300, 5});
  const auto rb = bootstrap_richness(b, {300, 5});
  CHECK(ra.replicate_values == rb.replicate_values);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(bootstrap_richness(testing::table1(), {1, 0}), InvalidInput);
  CHECK_NOTHROW(bootstrap_richness(testing::table1(), {2, 0}));
}

TEST_CASE("Monte-Carlo moments converge to the exact moments") {
  Rng rng(17);
  constexpr std::uint32_t kReplicates = 100'000;
  for (int trial = 0; trial < 12; ++trial) {
    const auto s = testing::random_sample(rng, 2, 25, 6);
    const auto exact = bootstrap_moments_exact(s);
    const auto r = bootstrap_richness(s, {kReplicates, rng.next()});
    double m4 = 0.0;
    for (auto v : r.replicate_values) m4 += std::pow(v - r.estimate, 4);
    m4 /= kReplicates;
    const double se_mean = std::sqrt(exact.variance / kReplicates) + 1e-12;
    const double se_var = std::sqrt(std::max(m4 - r.variance * r.variance, 0.0) / kReplicates) + 1e-12;
    INFO("n=" << s.total() << " C=" << s.categories());
    CHECK(std::abs(r.estimate - exact.mean) <= 3 * se_mean);
    CHECK(std::abs(r.variance - exact.variance) <= 3 * se_var);
  }
}

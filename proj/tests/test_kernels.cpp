#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <omp.h>

#include "richness/combinatorics.hpp"
#include "richness/kernels.hpp"
#include "richness/rng.hpp"

using namespace richness;
using namespace richness::kernels;

TEST_CASE("bootstrap kernels are bit-identical") {
  std::vector<std::uint32_t> obs;
  for (std::uint32_t c = 0; c < 30; ++c) obs.insert(obs.end(), 1 + c % 4, c);
  std::vector<std::uint32_t> serial(1000);
  bootstrap_distinct_serial(obs, 30, 12345, serial);
  for (int threads : {1, 2, 4, 7}) {
    omp_set_num_threads(threads);
    std::vector<std::uint32_t> par(1000);
    bootstrap_distinct_omp(obs, 30, 12345, par);
    CHECK(par == serial);
  }
}

TEST_CASE("bootstrap replicate r depends only on (seed, r)") {
  std::vector<std::uint32_t> obs = {0, 0, 1, 2, 2, 2, 3};
  std::vector<std::uint32_t> long_run(50);
  std::vector<std::uint32_t> short_run(10);
  bootstrap_distinct_serial(obs, 4, 8, long_run);
  bootstrap_distinct_serial(obs, 4, 8, short_run);
  CHECK(std::equal(short_run.begin(), short_run.end(), long_run.begin()));
}

TEST_CASE("subset and composition histograms agree and total Combin(n, k)") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint64_t> counts;
    std::uint64_t n = 0;
    const auto categories = 1 + rng.below(7);
    for (std::uint64_t c = 0; c < categories; ++c) {
      counts.push_back(1 + rng.below(4));
      n += counts.back();
    }
    for (std::uint32_t k = 1; k < n && k <= 5; ++k) {
      const auto a = vanished_histogram_subsets_serial(counts, k);
      const auto b = vanished_histogram_subsets_omp(counts, k);
      const auto c = vanished_histogram_compositions_serial(counts, k);
      const auto d = vanished_histogram_compositions_omp(counts, k);
      CHECK(a == b);
      CHECK(a == c);
      CHECK(a == d);
      CHECK(std::accumulate(a.begin(), a.end(), std::uint64_t{0}) == *binomial_exact(n, k));
    }
  }
}

TEST_CASE("histogram of the 44-flower sample at k = 2") {
  const std::vector<std::uint64_t> counts = {14, 10, 10, 9, 1};
  const auto h = vanished_histogram_compositions_omp(counts, 2);
  CHECK(h[0] == 903);
  CHECK(h[1] == 43);
  CHECK(h[2] == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <omp.h>
#include <vector>

#include "richness/error.hpp"
#include "richness/jackknife.hpp"
#include "test_support.hpp"

using namespace richness;
using namespace richness::jackknife;

namespace {

struct Literal {
  double estimate;
  double variance;
  std::uint64_t subsets;
};

// Bitmask walk over all subsets of size k, applying the pseudo-value and the
// variance formula term by term. n <= 25.
Literal literal_jackknife(const std::vector<std::int64_t>& counts, unsigned k) {
  std::vector<unsigned> owner;
  for (unsigned c = 0; c < counts.size(); ++c) owner.insert(owner.end(), counts[c], c);
  const unsigned n = static_cast<unsigned>(owner.size());
  const double big_c = static_cast<double>(counts.size());
  std::vector<double> pseudo;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    std::vector<bool> present(counts.size(), false);
    for (unsigned i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) present[owner[i]] = true;
    }
    double c_i = 0.0;
    for (bool p : present) c_i += p ? 1.0 : 0.0;
    pseudo.push_back((n * big_c - (n - k) * c_i) / k);
  }
  double mean = 0.0;
  for (double v : pseudo) mean += v;
  mean /= static_cast<double>(pseudo.size());
  double ss = 0.0;
  for (double v : pseudo) ss += (mean - v) * (mean - v);
  const double combin = static_cast<double>(pseudo.size());
  return {mean, ss / (n * (combin - k)), pseudo.size()};
}

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300}) ||
         (a == 0.0 && b == 0.0);
}

}  // namespace

TEST_CASE("order 1 on the 44-flower sample") {
  const auto s = testing::table1();
  for (const auto& r : {jackknife_enumerated(s, 1), jackknife_closed_form(s, 1)}) {
    CHECK(std::abs(r.estimate - 5.977) <= 5e-4);
    CHECK(r.estimate == doctest::Approx(5.0 + 43.0 / 44.0).epsilon(1e-14));
    CHECK(std::abs(r.variance - 0.955) <= 1e-3);
    CHECK(r.subset_count == std::uint64_t{44});
  }
}

TEST_CASE("order 2: 43 of 946 pairs remove the singleton") {
  const auto s = testing::table1();
  const auto r = jackknife_enumerated(s, 2);
  CHECK(r.subset_count == std::uint64_t{946});
  const double mean = (43.0 * 26.0 + 903.0 * 5.0) / 946.0;
  const double ss = 43.0 * (26.0 - mean) * (26.0 - mean) + 903.0 * (5.0 - mean) * (5.0 - mean);
  CHECK(r.estimate == doctest::Approx(mean).epsilon(1e-14));
  CHECK(r.variance == doctest::Approx(ss / (44.0 * 944.0)).epsilon(1e-13));
  CHECK(std::abs(r.estimate - 5.9545) <= 5e-4);
  CHECK(std::abs(r.variance - 0.4358) <= 1e-4);
  CHECK(std::abs(std::sqrt(r.variance) - 0.6601) <= 1e-3);
  const auto cf = jackknife_closed_form(s, 2);
  CHECK(close(cf.estimate, r.estimate, 1e-12));
  CHECK(close(cf.variance, r.variance, 1e-12));
}

TEST_CASE("order 3 on the 44-flower sample") {
  const auto s = testing::table1();
  const auto en = jackknife_enumerated(s, 3);
  const auto lit = jackknife_enumerated(s, 3, {kDefaultBudget, Walk::subsets, Execution::serial});
  const auto cf = jackknife_closed_form(s, 3);
  CHECK(en.subset_count == std::uint64_t{13244});
  CHECK(std::abs(en.estimate - 5.932) <= 5e-4);
  CHECK(std::abs(en.variance - 0.26976) <= 1e-5);
  CHECK(std::abs(std::sqrt(en.variance) - 0.5194) <= 5e-4);
  // E[d] = Combin(43, 2) / Combin(44, 3)
  CHECK(cf.estimate == doctest::Approx(5.0 + 41.0 / 3.0 * 903.0 / 13244.0).epsilon(1e-14));
  CHECK(close(lit.estimate, en.estimate, 1e-13));
  CHECK(close(lit.variance, en.variance, 1e-13));
  CHECK(close(cf.variance, en.variance, 1e-12));
  CHECK(en.mode == Mode::enumerated);
  CHECK(cf.mode == Mode::closed_form);
}

TEST_CASE("no category can vanish when every count exceeds k") {
  const auto s = testing::from_counts({4, 5, 9});
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (const auto& r : {jackknife_enumerated(s, k), jackknife_closed_form(s, k)}) {
      CHECK(r.estimate == 3.0);
      CHECK(r.variance == 0.0);
    }
  }
}

TEST_CASE("order validation and budget") {
  const auto s = testing::table1();
  CHECK_THROWS_AS(jackknife_enumerated(s, 0), InvalidOrder);
  CHECK_THROWS_AS(jackknife_enumerated(s, 44), InvalidOrder);
  CHECK_THROWS_AS(jackknife_closed_form(s, 44), InvalidOrder);
  CHECK_THROWS_AS(jackknife_enumerated(s, 10), BudgetExceeded);  // Combin(44,10) > 1e7
  CHECK_THROWS_AS(jackknife_enumerated(s, 3, {1000, Walk::compositions, Execution::parallel}),
                  BudgetExceeded);
  CHECK_NOTHROW(jackknife_closed_form(s, 10));
  CHECK(jackknife::jackknife(s, 10).mode == Mode::closed_form);
  CHECK(jackknife::jackknife(s, 3).mode == Mode::enumerated);
}

TEST_CASE("enumeration matches the literal bitmask oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = testing::random_sample(rng, 2, 18, 5);
    std::vector<std::int64_t> counts;
    for (auto c : s.counts()) counts.push_back(static_cast<std::int64_t>(c));
    for (std::uint32_t k = 1; k <= 4 && k < s.total(); ++k) {
      const auto oracle = literal_jackknife(counts, k);
      const auto en = jackknife_enumerated(s, k);
      INFO("n=" << s.total() << " k=" << k);
      CHECK(*en.subset_count == oracle.subsets);
      CHECK(close(en.estimate, oracle.estimate, 1e-12));
      CHECK(close(en.variance, oracle.variance, 1e-10));
    }
  }
}

TEST_CASE("closed form equals enumeration on random samples (n <= 25, k <= 4)") {
  Rng rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = testing::random_sample(rng, 2, 25, 6);
    for (std::uint32_t k = 1; k <= 4 && k < s.total(); ++k) {
      const auto comp = jackknife_enumerated(s, k);
      const auto subs = jackknife_enumerated(s, k, {kDefaultBudget, Walk::subsets, Execution::parallel});
      const auto cf = jackknife_closed_form(s, k);
      INFO("n=" << s.total() << " C=" << s.categories() << " k=" << k);
      CHECK(comp.estimate == subs.estimate);
      CHECK(comp.variance == subs.variance);
      CHECK(close(cf.estimate, comp.estimate, 1e-10));
      CHECK(close(cf.variance, comp.variance, 1e-10));
    }
  }
}

TEST_CASE("first-order identity C + f1 (n-1)/n") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_sample(rng, 2, 300, 4);
    const auto f = frequency_counts(s);
    const double f1 = f.contains(1) ? static_cast<double>(f.at(1)) : 0.0;
    const double n = static_cast<double>(s.total());
    const double expected = static_cast<double>(s.categories()) + f1 * (n - 1.0) / n;
    CHECK(jackknife_enumerated(s, 1).estimate == doctest::Approx(expected).epsilon(1e-13));
    CHECK(jackknife_closed_form(s, 1).estimate == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("estimate is at least C and variance non-negative") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_sample(rng, 2, 40, 3);
    for (std::uint32_t k = 1; k <= 5 && k < s.total(); ++k) {
      const auto r = jackknife::jackknife(s, k);
      CHECK(r.estimate >= static_cast<double>(s.categories()));
      CHECK(r.variance >= 0.0);
    }
  }
}

TEST_CASE("closed form handles samples far beyond enumeration") {
  std::vector<std::int64_t> counts(2000, 3);
  counts.push_back(1);
  counts.push_back(2);
  const auto s = testing::from_counts(counts);
  const auto r = jackknife_closed_form(s, 3);
  CHECK(std::isfinite(r.estimate));
  CHECK(std::isfinite(r.variance));
  CHECK(r.estimate > static_cast<double>(s.categories()));
  CHECK_FALSE((r.subset_count.has_value() && *r.subset_count < 1000));
}

TEST_CASE("parallel and serial walks agree for any thread count") {
  const auto s = testing::from_counts({1, 1, 2, 3, 1, 4, 2, 1});
  const auto ref = jackknife_enumerated(s, 4, {kDefaultBudget, Walk::subsets, Execution::serial});
  for (int threads : {1, 2, 5}) {
    omp_set_num_threads(threads);
    for (auto walk : {Walk::subsets, Walk::compositions}) {
      const auto r = jackknife_enumerated(s, 4, {kDefaultBudget, walk, Execution::parallel});
      CHECK(r.estimate == ref.estimate);
      CHECK(r.variance == ref.variance);
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "richness/error.hpp"
#include "richness/sample.hpp"
#include "test_support.hpp"

using namespace richness;

TEST_CASE("validate: 44-flower sample") {
  const auto s = testing::table1();
  CHECK(s.total() == 44);
  CHECK(s.categories() == 5);
  CHECK(s.entries().front().label == "purple");
  CHECK(s.entries().back().label == "white");
}

TEST_CASE("validate: minimal sample") {
  const auto s = validate({{"a", 1}});
  CHECK(s.total() == 1);
  CHECK(s.categories() == 1);
}

TEST_CASE("validate: errors") {
  CHECK_THROWS_AS(validate({}), EmptySample);
  CHECK_THROWS_AS(validate({{"a", 0}}), NonPositiveCount);
  CHECK_THROWS_AS(validate({{"a", -2}}), NonPositiveCount);
  CHECK_THROWS_AS(validate({{"a", 1}, {"a", 2}}), DuplicateLabel);
  try {
    validate({{"b", 3}, {"a", 0}});
    FAIL("expected throw");
  } catch (const NonPositiveCount& e) {
    CHECK(e.label() == "a");
  }
}

TEST_CASE("frequency counts") {
  CHECK(frequency_counts(testing::table1()) == FrequencyCounts{{14, 1}, {10, 2}, {9, 1}, {1, 1}});
  CHECK(frequency_counts(validate({{"a", 1}})) == FrequencyCounts{{1, 1}});
  CHECK(frequency_counts(validate({{"a", 3}, {"b", 3}})) == FrequencyCounts{{3, 2}});
}

TEST_CASE("frequency counts sum to C and n on random samples") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = testing::random_sample(rng, 1, 200, 30);
    std::uint64_t categories = 0;
    std::uint64_t individuals = 0;
    for (auto [j, fj] : frequency_counts(s)) {
      categories += fj;
      individuals += j * fj;
    }
    CHECK(categories == s.categories());
    CHECK(individuals == s.total());
    CHECK(s.categories() <= s.total());
  }
}

TEST_CASE("canonical order is count descending then label") {
  const auto s = validate({{"b", 2}, {"c", 5}, {"a", 2}});
  const auto canon = s.canonical_entries();
  REQUIRE(canon.size() == 3);
  CHECK(canon[0].label == "c");
  CHECK(canon[1].label == "a");
  CHECK(canon[2].label == "b");
  // input order untouched
  CHECK(s.entries()[0].label == "b");
}

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "richness/rng.hpp"
#include "richness/sample.hpp"

namespace testing {

inline richness::AbundanceSample table1() {
  return richness::validate(
      {{"purple", 14}, {"red", 10}, {"yellow", 10}, {"orange", 9}, {"white", 1}});
}

inline richness::AbundanceSample from_counts(const std::vector<std::int64_t>& counts) {
  std::vector<std::pair<std::string, std::int64_t>> raw;
  for (std::size_t i = 0; i < counts.size(); ++i) raw.emplace_back("c" + std::to_string(i), counts[i]);
  return richness::validate(std::move(raw));
}

/// Random sample with total at most max_total and at least min_total.
inline richness::AbundanceSample random_sample(richness::Rng& rng, std::uint64_t min_total,
                                               std::uint64_t max_total,
                                               std::uint64_t max_count = 8) {
  const std::uint64_t target = min_total + rng.below(max_total - min_total + 1);
  std::vector<std::int64_t> counts;
  std::uint64_t total = 0;
  while (total < target) {
    const std::uint64_t c = 1 + rng.below(std::min(max_count, target - total));
    counts.push_back(static_cast<std::int64_t>(c));
    total += c;
  }
  return from_counts(counts);
}

}  // namespace testing

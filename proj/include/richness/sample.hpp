#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace richness {

struct CategoryCount {
  std::string label;
  std::uint64_t count = 0;

  friend bool operator==(const CategoryCount&, const CategoryCount&) = default;
};

/// Validated abundance data: unique labels, every count >= 1, non-empty.
/// Input order is kept for reporting; no estimator depends on it.
class AbundanceSample {
 public:
  const std::vector<CategoryCount>& entries() const noexcept { return entries_; }
  std::uint64_t total() const noexcept { return total_; }  // n
  std::size_t categories() const noexcept { return entries_.size(); }  // C
  std::vector<std::uint64_t> counts() const;

  /// Entries sorted by (count desc, label asc).
  std::vector<CategoryCount> canonical_entries() const;

  friend bool operator==(const AbundanceSample&, const AbundanceSample&) = default;

 private:
  friend AbundanceSample validate(std::vector<std::pair<std::string, std::int64_t>> raw);
  std::vector<CategoryCount> entries_;
  std::uint64_t total_ = 0;
};

AbundanceSample validate(std::vector<std::pair<std::string, std::int64_t>> raw);

/// f_j: number of categories observed exactly j times.
using FrequencyCounts = std::map<std::uint64_t, std::uint64_t>;

FrequencyCounts frequency_counts(const AbundanceSample& s);

}  // namespace richness

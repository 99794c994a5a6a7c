#include "richness/sample.hpp"

#include <algorithm>
#include <unordered_set>

#include "richness/error.hpp"

namespace richness {

AbundanceSample validate(std::vector<std::pair<std::string, std::int64_t>> raw) {
  if (raw.empty()) throw EmptySample();
  AbundanceSample s;
  std::unordered_set<std::string> seen;
  s.entries_.reserve(raw.size());
  for (auto& [label, count] : raw) {
    if (count < 1) throw NonPositiveCount(label);
    if (!seen.insert(label).second) throw DuplicateLabel(label);
    s.total_ += static_cast<std::uint64_t>(count);
    s.entries_.push_back({std::move(label), static_cast<std::uint64_t>(count)});
  }
  return s;
}

std::vector<std::uint64_t> AbundanceSample::counts() const {
  std::vector<std::uint64_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.count);
  return out;
}

std::vector<CategoryCount> AbundanceSample::canonical_entries() const {
  auto sorted = entries_;
  std::sort(sorted.begin(), sorted.end(), [](const CategoryCount& a, const CategoryCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.label < b.label;
  });
  return sorted;
}

FrequencyCounts frequency_counts(const AbundanceSample& s) {
  FrequencyCounts f;
  for (const auto& e : s.entries()) ++f[e.count];
  return f;
}

}  // namespace richness

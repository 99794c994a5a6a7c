#include <numeric>
#include <vector>

#include "richness/combinatorics.hpp"
#include "richness/kernels.hpp"

namespace richness::kernels {
namespace {

std::vector<std::uint32_t> expand(std::span<const std::uint64_t> counts) {
  std::vector<std::uint32_t> owner;
  for (std::uint32_t c = 0; c < counts.size(); ++c) owner.insert(owner.end(), counts[c], c);
  return owner;
}

// Walks every k-subset whose smallest element is `first`, adding to hist.
void subsets_with_first(const std::vector<std::uint32_t>& owner,
                        std::span<const std::uint64_t> counts, std::uint32_t k,
                        std::uint32_t first, std::vector<std::uint64_t>& hist) {
  const auto n = static_cast<std::uint32_t>(owner.size());
  const std::uint32_t rest = k - 1;
  if (n - first - 1 < rest) return;
  std::vector<std::uint32_t> idx(rest);
  std::iota(idx.begin(), idx.end(), first + 1);
  std::vector<std::uint64_t> removed(counts.size(), 0);
  while (true) {
    ++removed[owner[first]];
    for (auto i : idx) ++removed[owner[i]];
    // Each touched category is tallied once, then reset.
    std::uint32_t vanished = 0;
    auto tally = [&](std::uint32_t c) {
      if (removed[c] == 0) return;
      if (removed[c] == counts[c]) ++vanished;
      removed[c] = 0;
    };
    tally(owner[first]);
    for (auto i : idx) tally(owner[i]);
    ++hist[vanished];

    // Advance to the next combination of idx within (first, n).
    int pos = static_cast<int>(rest) - 1;
    while (pos >= 0 && idx[pos] == n - rest + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (std::uint32_t j = pos + 1; j < rest; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void compositions_from(std::span<const std::uint64_t> counts, std::size_t category,
                       std::uint64_t remaining, std::uint64_t weight, std::uint32_t vanished,
                       std::vector<std::uint64_t>& hist) {
  if (remaining == 0) {
    hist[vanished] += weight;
    return;
  }
  if (category == counts.size()) return;
  const std::uint64_t nc = counts[category];
  const std::uint64_t top = nc < remaining ? nc : remaining;
  for (std::uint64_t r = 0; r <= top; ++r) {
    compositions_from(counts, category + 1, remaining - r, weight * *binomial_exact(nc, r),
                      vanished + (r == nc ? 1 : 0), hist);
  }
}

void composition_branch(std::span<const std::uint64_t> counts, std::uint32_t k,
                        std::uint64_t r0, std::vector<std::uint64_t>& hist) {
  const std::uint64_t n0 = counts[0];
  compositions_from(counts, 1, k - r0, *binomial_exact(n0, r0), r0 == n0 ? 1 : 0, hist);
}

void merge_into(std::vector<std::uint64_t>& total, const std::vector<std::uint64_t>& part) {
  for (std::size_t d = 0; d < total.size(); ++d) total[d] += part[d];
}

}  // namespace

std::vector<std::uint64_t> vanished_histogram_subsets_serial(
    std::span<const std::uint64_t> counts, std::uint32_t k) {
  const auto owner = expand(counts);
  std::vector<std::uint64_t> hist(counts.size() + 1, 0);
  for (std::uint32_t first = 0; first < owner.size(); ++first) {
    subsets_with_first(owner, counts, k, first, hist);
  }
  return hist;
}

std::vector<std::uint64_t> vanished_histogram_subsets_omp(std::span<const std::uint64_t> counts,
                                                          std::uint32_t k) {
  const auto owner = expand(counts);
  const auto n = static_cast<std::int64_t>(owner.size());
  std::vector<std::uint64_t> hist(counts.size() + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(counts.size() + 1, 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t first = 0; first < n; ++first) {
      subsets_with_first(owner, counts, k, static_cast<std::uint32_t>(first), local);
    }
#pragma omp critical(richness_subset_merge)
    merge_into(hist, local);
  }
  return hist;
}

std::vector<std::uint64_t> vanished_histogram_compositions_serial(
    std::span<const std::uint64_t> counts, std::uint32_t k) {
  std::vector<std::uint64_t> hist(counts.size() + 1, 0);
  const std::uint64_t top = counts[0] < k ? counts[0] : k;
  for (std::uint64_t r0 = 0; r0 <= top; ++r0) composition_branch(counts, k, r0, hist);
  return hist;
}

std::vector<std::uint64_t> vanished_histogram_compositions_omp(
    std::span<const std::uint64_t> counts, std::uint32_t k) {
  const std::uint64_t top = counts[0] < k ? counts[0] : k;
  std::vector<std::vector<std::uint64_t>> branches(top + 1,
                                                   std::vector<std::uint64_t>(counts.size() + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t r0 = 0; r0 <= static_cast<std::int64_t>(top); ++r0) {
    composition_branch(counts, k, static_cast<std::uint64_t>(r0), branches[r0]);
  }
  std::vector<std::uint64_t> hist(counts.size() + 1, 0);
  for (const auto& b : branches) merge_into(hist, b);
  return hist;
}

}  // namespace richness::kernels

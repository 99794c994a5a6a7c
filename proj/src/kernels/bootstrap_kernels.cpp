#include <algorithm>
#include <vector>

#include "richness/kernels.hpp"
#include "richness/rng.hpp"

namespace richness::kernels {
namespace {

std::uint32_t distinct_in_resample(std::span<const std::uint32_t> observations,
                                   std::uint64_t stream_seed, std::vector<std::uint8_t>& seen) {
  std::fill(seen.begin(), seen.end(), std::uint8_t{0});
  Rng rng(stream_seed);
  const std::uint64_t n = observations.size();
  std::uint32_t distinct = 0;
  for (std::uint64_t draw = 0; draw < n; ++draw) {
    const std::uint32_t category = observations[rng.below(n)];
    if (!seen[category]) {
      seen[category] = 1;
      ++distinct;
    }
  }
  return distinct;
}

}  // namespace

void bootstrap_distinct_serial(std::span<const std::uint32_t> observations,
                               std::uint32_t categories, std::uint64_t seed,
                               std::span<std::uint32_t> out) {
  std::vector<std::uint8_t> seen(categories);
  for (std::size_t r = 0; r < out.size(); ++r) {
    out[r] = distinct_in_resample(observations, substream_seed(seed, r), seen);
  }
}

void bootstrap_distinct_omp(std::span<const std::uint32_t> observations,
                            std::uint32_t categories, std::uint64_t seed,
                            std::span<std::uint32_t> out) {
  const auto replicates = static_cast<std::int64_t>(out.size());
#pragma omp parallel
  {
    std::vector<std::uint8_t> seen(categories);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < replicates; ++r) {
      out[r] = distinct_in_resample(observations, substream_seed(seed, r), seen);
    }
  }
}

}  // namespace richness::kernels

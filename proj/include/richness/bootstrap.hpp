#pragma once

#include <cstdint>
#include <vector>

#include "richness/parallel.hpp"
#include "richness/sample.hpp"

namespace richness::bootstrap {

inline constexpr std::uint32_t kDefaultReplicates = 200;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct BootstrapConfig {
  std::uint32_t replicates = kDefaultReplicates;  // >= 2
  std::uint64_t seed = kDefaultSeed;
};

struct BootstrapResult {
  double estimate = 0.0;  // mean of replicate_values
  double variance = 0.0;  // sum of squared deviations / (replicates - 1)
  std::vector<std::uint32_t> replicate_values;  // distinct categories per resample
};

/// Resamples the n observations uniformly with replacement. Observations are
/// laid out in canonical (count desc, label asc) order and replicate r draws
/// from substream_seed(cfg.seed, r), so the result is a function of
/// (sample multiset, seed, replicates) only.
/// Throws InvalidInput when cfg.replicates < 2.
BootstrapResult bootstrap_richness(const AbundanceSample& s, const BootstrapConfig& cfg,
                                   Execution exec = Execution::parallel);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Exact mean and variance of the number of distinct categories in one
/// resample. With q_c = (1 - n_c/n)^n:
///   mean = sum_c (1 - q_c)
///   var  = sum_c q_c (1 - q_c) + sum_{c != c'} [(1 - n_c/n - n_c'/n)^n - q_c q_c']
Moments bootstrap_moments_exact(const AbundanceSample& s);

}  // namespace richness::bootstrap

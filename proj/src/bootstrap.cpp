#include "richness/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "richness/error.hpp"
#include "richness/kernels.hpp"

namespace richness::bootstrap {

BootstrapResult bootstrap_richness(const AbundanceSample& s, const BootstrapConfig& cfg,
                                   Execution exec) {
  if (cfg.replicates < 2) throw InvalidInput("bootstrap needs at least 2 replicates");

  const auto canonical = s.canonical_entries();
  std::vector<std::uint32_t> observations;
  observations.reserve(s.total());
  for (std::uint32_t c = 0; c < canonical.size(); ++c) {
    observations.insert(observations.end(), canonical[c].count, c);
  }

  BootstrapResult result;
  result.replicate_values.resize(cfg.replicates);
  const auto categories = static_cast<std::uint32_t>(canonical.size());
  if (exec == Execution::parallel) {
    kernels::bootstrap_distinct_omp(observations, categories, cfg.seed, result.replicate_values);
  } else {
    kernels::bootstrap_distinct_serial(observations, categories, cfg.seed,
                                       result.replicate_values);
  }

  std::uint64_t sum = 0;
  for (auto v : result.replicate_values) sum += v;
  const double r = cfg.replicates;
  result.estimate = static_cast<double>(sum) / r;
  double ss = 0.0;
  for (auto v : result.replicate_values) {
    const double dev = result.estimate - v;
    ss += dev * dev;
  }
  result.variance = ss / (r - 1.0);
  return result;
}

Moments bootstrap_moments_exact(const AbundanceSample& s) {
  const double n = static_cast<double>(s.total());
  const auto counts = s.counts();
  std::vector<double> p;
  std::vector<double> q;
  for (auto c : counts) {
    p.push_back(static_cast<double>(c) / n);
    q.push_back(std::pow(1.0 - p.back(), n));
  }
  Moments m;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    m.mean += 1.0 - q[i];
    m.variance += q[i] * (1.0 - q[i]);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (i == j) continue;
      // Clamp: for two categories covering the whole sample the base is an exact 0.
      const double both_missing = std::pow(std::max(0.0, 1.0 - p[i] - p[j]), n);
      m.variance += both_missing - q[i] * q[j];
    }
  }
  if (m.variance < 0.0) m.variance = 0.0;
  return m;
}

}  // namespace richness::bootstrap

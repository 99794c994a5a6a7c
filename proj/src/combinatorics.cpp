#include "richness/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace richness {

std::optional<std::uint64_t> binomial_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // result_i = Combin(n - k + i, i) is an integer at every step.
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(result);
}

double binomial_real(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  if (auto exact = binomial_exact(n, k)) return static_cast<double>(*exact);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::exp(std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0));
}

double all_removed_probability(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  if (m > k) return 0.0;
  double p = 1.0;
  for (std::uint64_t i = 0; i < m; ++i) {
    p *= static_cast<double>(k - i) / static_cast<double>(n - i);
  }
  return p;
}

}  // namespace richness

#pragma once

#include <cstdint>
#include <optional>

namespace richness {

/// Exact binomial coefficient; empty when the value does not fit in 64 bits.
std::optional<std::uint64_t> binomial_exact(std::uint64_t n, std::uint64_t k);

/// Floating-point binomial coefficient, used only when the exact value overflows.
double binomial_real(std::uint64_t n, std::uint64_t k);

/// Probability that m fixed items all land in a uniform k-subset of n items,
/// i.e. Combin(n-m, k-m) / Combin(n, k); zero when m > k.
double all_removed_probability(std::uint64_t n, std::uint64_t k, std::uint64_t m);

}  // namespace richness

#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version and a serial
// reference twin with the same signature; results are bit-identical because
// per-item randomness comes from substreams and reductions are either integer
// or done afterwards in a fixed order.

#include <cstdint>
#include <span>
#include <vector>

namespace richness::kernels {

/// Distinct categories in each bootstrap resample. `observations` holds the
/// category index (0..categories-1) of every individual; replicate r writes
/// out[r] using substream_seed(seed, r).
void bootstrap_distinct_serial(std::span<const std::uint32_t> observations,
                               std::uint32_t categories, std::uint64_t seed,
                               std::span<std::uint32_t> out);
void bootstrap_distinct_omp(std::span<const std::uint32_t> observations,
                            std::uint32_t categories, std::uint64_t seed,
                            std::span<std::uint32_t> out);

/// Histogram over all k-subsets of the observations: hist[d] = number of
/// subsets whose removal makes exactly d categories vanish. hist has
/// categories + 1 slots.
std::vector<std::uint64_t> vanished_histogram_subsets_serial(
    std::span<const std::uint64_t> counts, std::uint32_t k);
std::vector<std::uint64_t> vanished_histogram_subsets_omp(std::span<const std::uint64_t> counts,
                                                          std::uint32_t k);

/// Same histogram, walking per-category removal counts r_c (sum r_c = k,
/// r_c <= n_c) weighted by prod Combin(n_c, r_c). Requires Combin(n, k) to fit
/// in 64 bits.
std::vector<std::uint64_t> vanished_histogram_compositions_serial(
    std::span<const std::uint64_t> counts, std::uint32_t k);
std::vector<std::uint64_t> vanished_histogram_compositions_omp(
    std::span<const std::uint64_t> counts, std::uint32_t k);

}  // namespace richness::kernels

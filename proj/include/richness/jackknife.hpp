#pragma once

#include <cstdint>
#include <optional>

#include "richness/parallel.hpp"
#include "richness/sample.hpp"

namespace richness::jackknife {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class Mode { enumerated, closed_form };

struct JackknifeResult {
  std::uint32_t order = 0;  // k
  double estimate = 0.0;
  double variance = 0.0;
  /// Combin(n, k); empty when it does not fit in 64 bits.
  std::optional<std::uint64_t> subset_count;
  Mode mode = Mode::enumerated;
};

/// How the enumerated estimator walks the deletions.
enum class Walk {
  compositions,  // per-category removal counts weighted by products of binomials
  subsets,       // every k-subset of the n observations, one at a time
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  Walk walk = Walk::compositions;
  Execution exec = Execution::parallel;
};

/// Delete-k jackknife by enumeration. Each k-subset leaves c_i categories and
/// yields the pseudo-value (n C - (n - k) c_i) / k; the estimate is their mean
/// and the variance is sum (mean - CJ_i)^2 / (n (Combin(n,k) - k)).
/// Throws InvalidOrder for k == 0 or k >= n, BudgetExceeded when
/// Combin(n, k) > options.budget.
JackknifeResult jackknife_enumerated(const AbundanceSample& s, std::uint32_t k,
                                     const EnumerationOptions& options = {});

/// Same estimator from the first two moments of the number of categories that
/// vanish in a uniform k-subset. Works for any n.
JackknifeResult jackknife_closed_form(const AbundanceSample& s, std::uint32_t k);

/// Enumerated when within the default budget, closed form otherwise.
JackknifeResult jackknife(const AbundanceSample& s, std::uint32_t k);

const char* to_string(Mode mode);

}  // namespace richness::jackknife

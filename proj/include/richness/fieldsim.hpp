#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "richness/estimate.hpp"
#include "richness/inference.hpp"
#include "richness/parallel.hpp"
#include "richness/sample.hpp"

namespace richness::fieldsim {

enum class FieldKind { negative_binomial, log_series, uniform, explicit_abundances };

/// Synthetic population description. Unless overridden, the negative-binomial
/// mean and the log-series mean are field_size / true_categories and the
/// negative-binomial size is 1; these are simulation defaults, not estimates
/// from any data.
struct FieldModel {
  FieldKind kind = FieldKind::uniform;
  std::uint64_t true_categories = 0;  // ignored for explicit_abundances
  std::uint64_t field_size = 0;       // target size; explicit uses the sum of abundances
  double nb_size = 1.0;               // gamma shape r
  std::optional<double> nb_mean;
  std::optional<double> log_series_x;
  std::vector<std::uint64_t> abundances;  // explicit_abundances only
  std::vector<std::string> labels;        // optional, explicit_abundances only
  std::uint32_t max_rejection_rounds = 10'000;
};

struct SyntheticField {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> abundances;  // every entry >= 1

  std::uint64_t size() const;
  std::size_t categories() const { return abundances.size(); }
};

/// Builds the population. Negative-binomial abundances are Poisson draws with
/// gamma-distributed rates (shape r, scale mean / r); zero draws are rejected
/// and redrawn, so the law is the zero-truncated negative binomial.
/// Throws InfeasibleModel when the model cannot be realised.
SyntheticField generate_field(const FieldModel& m, std::uint64_t seed);

/// Simple random sample of n individuals without replacement. Categories with
/// no sampled individual are absent from the result.
/// Throws SampleTooLarge when n exceeds the field, InvalidInput when n == 0.
AbundanceSample sample_field(const SyntheticField& f, std::uint64_t n, std::uint64_t seed);

struct MethodCoverage {
  std::string method;
  std::uint64_t trials = 0;    // trials where the method produced an answer
  std::uint64_t failures = 0;  // trials where it raised (e.g. Fisher with C == n)
  double mean_estimate = 0.0;
  double bias = 0.0;
  double rmse = 0.0;
  double coverage = 0.0;  // fraction of trials with c_max >= true categories
  double mean_c_max = 0.0;

  friend bool operator==(const MethodCoverage&, const MethodCoverage&) = default;
};

struct CoverageReport {
  std::uint64_t true_categories = 0;
  std::uint64_t field_size = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double risk = 0.05;
  inference::Sidedness sidedness = inference::Sidedness::two_sided;
  double mean_observed = 0.0;
  std::uint64_t min_observed = 0;
  std::uint64_t max_observed = 0;
  std::vector<MethodCoverage> methods;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

struct ExperimentOptions {
  std::uint32_t replicates = bootstrap::kDefaultReplicates;
  inference::Sidedness sidedness = inference::Sidedness::two_sided;
  Execution exec = Execution::parallel;
};

/// Generates one field from the seed, then draws `trials` independent
/// samples (trial t uses substream_seed(seed, t)) and runs every method on
/// each. Trials run in parallel; the report does not depend on thread count.
CoverageReport run_experiment(const FieldModel& m, std::uint64_t n, std::uint64_t trials,
                              const std::vector<MethodSpec>& methods, double risk,
                              std::uint64_t seed, const ExperimentOptions& options = {});

const char* to_string(FieldKind kind);
FieldKind parse_field_kind(const std::string& text);

}  // namespace richness::fieldsim

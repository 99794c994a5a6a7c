#include "richness/fieldsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "richness/error.hpp"
#include "richness/rng.hpp"

namespace richness::fieldsim {
namespace {

std::string category_label(std::uint64_t i) {
  std::string digits = std::to_string(i + 1);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return "cat" + digits;
}

double log_series_mean(double x) { return -x / ((1.0 - x) * std::log1p(-x)); }

double log_series_parameter(double mean) {
  if (!(mean > 1.0)) throw InfeasibleModel("log-series mean must exceed 1");
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (log_series_mean(mid) < mean) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Inverse-CDF draw from P(k) = -x^k / (k ln(1 - x)), k >= 1.
std::uint64_t draw_log_series(double x, Rng& rng) {
  const double u = rng.uniform();
  double p = -x / std::log1p(-x);
  double cumulative = p;
  std::uint64_t k = 1;
  while (u > cumulative && k < 100'000'000) {
    p *= x * static_cast<double>(k) / static_cast<double>(k + 1);
    cumulative += p;
    ++k;
    if (p == 0.0) break;
  }
  return k;
}

std::vector<std::uint64_t> uniform_abundances(const FieldModel& m) {
  const std::uint64_t c = m.true_categories;
  std::vector<std::uint64_t> out(c, m.field_size / c);
  for (std::uint64_t i = 0; i < m.field_size % c; ++i) ++out[i];
  return out;
}

std::vector<std::uint64_t> negative_binomial_abundances(const FieldModel& m, Rng& rng) {
  const double mean = m.nb_mean.value_or(static_cast<double>(m.field_size) /
                                         static_cast<double>(m.true_categories));
  if (!(m.nb_size > 0.0) || !(mean > 0.0)) {
    throw InfeasibleModel("negative binomial needs positive size and mean");
  }
  std::gamma_distribution<double> rate(m.nb_size, mean / m.nb_size);
  std::vector<std::uint64_t> out;
  out.reserve(m.true_categories);
  for (std::uint64_t c = 0; c < m.true_categories; ++c) {
    std::uint64_t value = 0;
    for (std::uint32_t round = 0; round < m.max_rejection_rounds && value == 0; ++round) {
      const double lambda = rate(rng.engine());
      if (lambda > 0.0) value = std::poisson_distribution<std::uint64_t>(lambda)(rng.engine());
    }
    if (value == 0) {
      throw InfeasibleModel("could not draw a positive abundance within " +
                            std::to_string(m.max_rejection_rounds) + " rounds");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

std::uint64_t SyntheticField::size() const {
  return std::accumulate(abundances.begin(), abundances.end(), std::uint64_t{0});
}

SyntheticField generate_field(const FieldModel& m, std::uint64_t seed) {
  SyntheticField f;
  if (m.kind == FieldKind::explicit_abundances) {
    if (m.abundances.empty()) throw InfeasibleModel("explicit field needs abundances");
    if (!m.labels.empty() && m.labels.size() != m.abundances.size()) {
      throw InfeasibleModel("labels and abundances differ in length");
    }
    for (auto a : m.abundances) {
      if (a == 0) throw InfeasibleModel("explicit abundances must be positive");
    }
    f.abundances = m.abundances;
    for (std::size_t i = 0; i < m.abundances.size(); ++i) {
      f.labels.push_back(m.labels.empty() ? category_label(i) : m.labels[i]);
    }
    return f;
  }

  if (m.true_categories == 0) throw InfeasibleModel("field needs at least one category");
  if (m.field_size < m.true_categories) {
    throw InfeasibleModel("field size " + std::to_string(m.field_size) + " is below " +
                          std::to_string(m.true_categories) + " categories");
  }
  Rng rng(seed);
  switch (m.kind) {
    case FieldKind::uniform:
      f.abundances = uniform_abundances(m);
      break;
    case FieldKind::negative_binomial:
      f.abundances = negative_binomial_abundances(m, rng);
      break;
    case FieldKind::log_series: {
      const double x = m.log_series_x ? *m.log_series_x
                                      : log_series_parameter(static_cast<double>(m.field_size) /
                                                             static_cast<double>(m.true_categories));
      if (!(x > 0.0 && x < 1.0)) throw InfeasibleModel("log-series x must lie in (0, 1)");
      for (std::uint64_t c = 0; c < m.true_categories; ++c) {
        f.abundances.push_back(draw_log_series(x, rng));
      }
      break;
    }
    case FieldKind::explicit_abundances:
      break;
  }
  for (std::uint64_t i = 0; i < f.abundances.size(); ++i) f.labels.push_back(category_label(i));
  return f;
}

AbundanceSample sample_field(const SyntheticField& f, std::uint64_t n, std::uint64_t seed) {
  const std::uint64_t size = f.size();
  if (n == 0) throw InvalidInput("sample size must be positive");
  if (n > size) throw SampleTooLarge(n, size);

  // Floyd's algorithm: n distinct positions out of [0, size).
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(n * 2);
  for (std::uint64_t j = size - n; j < size; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }

  std::vector<std::uint64_t> upper(f.abundances.size());
  std::partial_sum(f.abundances.begin(), f.abundances.end(), upper.begin());
  std::vector<std::int64_t> drawn(f.abundances.size(), 0);
  for (auto position : chosen) {
    const auto it = std::upper_bound(upper.begin(), upper.end(), position);
    ++drawn[static_cast<std::size_t>(it - upper.begin())];
  }

  std::vector<std::pair<std::string, std::int64_t>> raw;
  for (std::size_t c = 0; c < drawn.size(); ++c) {
    if (drawn[c] > 0) raw.emplace_back(f.labels[c], drawn[c]);
  }
  return validate(std::move(raw));
}

namespace {

struct MethodOutcome {
  bool ok = false;
  double estimate = 0.0;
  long long c_max = 0;
};

struct TrialOutcome {
  std::uint64_t observed = 0;
  std::vector<MethodOutcome> methods;
};

TrialOutcome run_trial(const SyntheticField& field, std::uint64_t n, std::uint64_t trial_seed,
                       const std::vector<MethodSpec>& methods, double risk,
                       const ExperimentOptions& options) {
  TrialOutcome out;
  const auto sample = sample_field(field, n, substream_seed(trial_seed, 0));
  out.observed = sample.categories();
  EstimateOptions est;
  est.bootstrap.replicates = options.replicates;
  est.bootstrap.seed = substream_seed(trial_seed, 1);
  est.exec = Execution::serial;
  for (const auto& method : methods) {
    MethodOutcome mo;
    try {
      const auto row = estimate_with(sample, method, est);
      const auto answer =
          inference::upper_bound(row.method, row.estimate, row.variance, risk, options.sidedness);
      mo = {true, row.estimate, answer.c_max};
    } catch (const ComputeError&) {
      mo.ok = false;
    }
    out.methods.push_back(mo);
  }
  return out;
}

}  // namespace

CoverageReport run_experiment(const FieldModel& m, std::uint64_t n, std::uint64_t trials,
                              const std::vector<MethodSpec>& methods, double risk,
                              std::uint64_t seed, const ExperimentOptions& options) {
  if (trials == 0) throw InvalidInput("experiment needs at least one trial");
  inference::risk_quantile(risk, options.sidedness);  // validates risk up front

  const auto field = generate_field(m, substream_seed(seed, kFieldStreamTag));
  if (n == 0) throw InvalidInput("sample size must be positive");
  if (n > field.size()) throw SampleTooLarge(n, field.size());

  std::vector<TrialOutcome> outcomes(trials);
  const auto count = static_cast<std::int64_t>(trials);
  if (options.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < count; ++t) {
      outcomes[t] = run_trial(field, n, substream_seed(seed, t), methods, risk, options);
    }
  } else {
    for (std::int64_t t = 0; t < count; ++t) {
      outcomes[t] = run_trial(field, n, substream_seed(seed, t), methods, risk, options);
    }
  }

  CoverageReport report;
  report.true_categories = field.categories();
  report.field_size = field.size();
  report.sample_size = n;
  report.trials = trials;
  report.seed = seed;
  report.risk = risk;
  report.sidedness = options.sidedness;
  report.min_observed = outcomes.front().observed;
  report.max_observed = outcomes.front().observed;
  std::uint64_t observed_sum = 0;
  for (const auto& o : outcomes) {
    observed_sum += o.observed;
    report.min_observed = std::min(report.min_observed, o.observed);
    report.max_observed = std::max(report.max_observed, o.observed);
  }
  report.mean_observed = static_cast<double>(observed_sum) / static_cast<double>(trials);

  const double truth = static_cast<double>(report.true_categories);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    MethodCoverage mc;
    mc.method = methods[i].tag();
    double sum = 0.0;
    double sq = 0.0;
    double c_max_sum = 0.0;
    std::uint64_t covered = 0;
    for (const auto& o : outcomes) {
      const auto& r = o.methods[i];
      if (!r.ok) {
        ++mc.failures;
        continue;
      }
      ++mc.trials;
      sum += r.estimate;
      sq += (r.estimate - truth) * (r.estimate - truth);
      c_max_sum += static_cast<double>(r.c_max);
      if (r.c_max >= static_cast<long long>(report.true_categories)) ++covered;
    }
    if (mc.trials > 0) {
      const double t = static_cast<double>(mc.trials);
      mc.mean_estimate = sum / t;
      mc.bias = mc.mean_estimate - truth;
      mc.rmse = std::sqrt(sq / t);
      mc.coverage = static_cast<double>(covered) / t;
      mc.mean_c_max = c_max_sum / t;
    }
    report.methods.push_back(mc);
  }
  return report;
}

const char* to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::negative_binomial: return "negative_binomial";
    case FieldKind::log_series: return "log_series";
    case FieldKind::uniform: return "uniform";
    case FieldKind::explicit_abundances: return "explicit";
  }
  return "";
}

FieldKind parse_field_kind(const std::string& text) {
  if (text == "negative_binomial") return FieldKind::negative_binomial;
  if (text == "log_series") return FieldKind::log_series;
  if (text == "uniform") return FieldKind::uniform;
  if (text == "explicit") return FieldKind::explicit_abundances;
  throw InvalidInput("unknown field model '" + text + "'");
}

}  // namespace richness::fieldsim

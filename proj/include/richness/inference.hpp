#pragma once

#include <string>

namespace richness::inference {

enum class Sidedness { two_sided, one_sided };

/// Normal-approximation answer to "how many categories at most".
struct ConfidenceAnswer {
  std::string method;
  double estimate = 0.0;
  double std_dev = 0.0;
  double quantile = 0.0;
  double upper_bound = 0.0;  // estimate + quantile * std_dev
  long long c_max = 0;       // ceil(upper_bound)
  double risk = 0.05;
  Sidedness sidedness = Sidedness::two_sided;

  friend bool operator==(const ConfidenceAnswer&, const ConfidenceAnswer&) = default;
};

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse standard normal CDF. Acklam's rational approximation followed by
/// one Halley step against normal_cdf; absolute error well below 1e-9.
/// Throws InvalidProbability unless 0 < p < 1.
double normal_quantile(double p);

/// Quantile Phi^-1(1 - risk/2) for two-sided, Phi^-1(1 - risk) for one-sided.
double risk_quantile(double risk, Sidedness sidedness);

/// Throws InvalidInput for negative variance, InvalidProbability for risk
/// outside (0, 1).
ConfidenceAnswer upper_bound(std::string method, double estimate, double variance, double risk,
                             Sidedness sidedness);

const char* to_string(Sidedness s);
Sidedness parse_sidedness(const std::string& text);

}  // namespace richness::inference

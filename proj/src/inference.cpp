#include "richness/inference.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "richness/error.hpp"

namespace richness::inference {
namespace {

constexpr std::array<double, 6> kA = {-3.969683028665376e+01, 2.209460984245205e+02,
                                      -2.759285104469687e+02, 1.383577518672690e+02,
                                      -3.066479806614716e+01, 2.506628277459239e+00};
constexpr std::array<double, 5> kB = {-5.447609879822406e+01, 1.615858368580409e+02,
                                      -1.556989798598866e+02, 6.680131188771972e+01,
                                      -1.328068155288572e+01};
constexpr std::array<double, 6> kC = {-7.784894002430293e-03, -3.223964580411365e-01,
                                      -2.400758277161838e+00, -2.549732539343734e+00,
                                      4.374664141464968e+00, 2.938163982698783e+00};
constexpr std::array<double, 4> kD = {7.784695709041462e-03, 3.224671290700398e-01,
                                      2.445134137142996e+00, 3.754408661907416e+00};
constexpr double kLowTail = 0.02425;

double acklam(double p) {
  if (p < kLowTail) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
           ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
  }
  if (p > 1.0 - kLowTail) return -acklam(1.0 - p);
  const double q = p - 0.5;
  const double r = q * q;
  return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
         (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidProbability("probability must lie in (0, 1), got " + std::to_string(p));
  }
  double x = acklam(p);
  // Halley refinement.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double risk_quantile(double risk, Sidedness sidedness) {
  if (!(risk > 0.0 && risk < 1.0)) {
    throw InvalidProbability("risk must lie in (0, 1), got " + std::to_string(risk));
  }
  return normal_quantile(sidedness == Sidedness::two_sided ? 1.0 - risk / 2.0 : 1.0 - risk);
}

ConfidenceAnswer upper_bound(std::string method, double estimate, double variance, double risk,
                             Sidedness sidedness) {
  if (variance < 0.0) throw InvalidInput("variance must be non-negative");
  ConfidenceAnswer a;
  a.method = std::move(method);
  a.estimate = estimate;
  a.std_dev = std::sqrt(variance);
  a.quantile = risk_quantile(risk, sidedness);
  a.upper_bound = estimate + a.quantile * a.std_dev;
  a.c_max = static_cast<long long>(std::ceil(a.upper_bound));
  a.risk = risk;
  a.sidedness = sidedness;
  return a;
}

const char* to_string(Sidedness s) { return s == Sidedness::two_sided ? "two_sided" : "one_sided"; }

Sidedness parse_sidedness(const std::string& text) {
  if (text == "two_sided" || text == "two") return Sidedness::two_sided;
  if (text == "one_sided" || text == "one") return Sidedness::one_sided;
  throw InvalidInput("unknown sidedness '" + text + "'");
}

}  // namespace richness::inference

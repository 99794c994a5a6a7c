#include "richness/fisher.hpp"

#include <cmath>
#include <numbers>

#include "richness/error.hpp"

namespace richness::fisher {
namespace {

// d/d(alpha) of alpha ln(1 + N/alpha).
double residual_slope(double alpha, double n) {
  return std::log1p(n / alpha) - n / (alpha + n);
}

}  // namespace

double log_series_residual(double alpha, std::uint64_t c, std::uint64_t n) {
  const double nd = static_cast<double>(n);
  return static_cast<double>(c) - alpha * std::log1p(nd / alpha);
}

FisherFit solve_alpha(std::uint64_t c, std::uint64_t n, double tol) {
  if (c < 1) throw InvalidInput("observed categories must be at least 1");
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (c >= n) {
    throw NoFiniteSolution("no finite alpha when observed categories (" + std::to_string(c) +
                           ") >= sample size (" + std::to_string(n) + ")");
  }
  const double nd = static_cast<double>(n);
  auto f = [&](double a) { return log_series_residual(a, c, n); };

  // f is decreasing in alpha: positive below the root, negative above.
  double seed = static_cast<double>(c) / std::log1p(nd);
  double lo = seed;
  double hi = seed;
  while (f(lo) < 0.0) lo *= 0.5;
  while (f(hi) > 0.0) hi *= 2.0;

  double alpha = seed;
  if (alpha <= lo || alpha >= hi) alpha = 0.5 * (lo + hi);
  double r = f(alpha);
  for (int iter = 0; iter < 500 && std::abs(r) > tol; ++iter) {
    if (r > 0.0) lo = alpha; else hi = alpha;
    const double step = r / residual_slope(alpha, nd);  // Newton on -f
    double next = alpha + step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == alpha) break;
    alpha = next;
    r = f(alpha);
  }
  return FisherFit{alpha, c, n, r};
}

double variance_of_richness(const FisherFit& fit, std::uint64_t n) {
  const double a = fit.alpha;
  const double nd = static_cast<double>(n);
  // ln((2N + a)/(N + a)) = ln(1 + N/(N + a))
  return a * std::log1p(nd / (nd + a)) - a * a * nd / ((nd + a) * (nd + a));
}

double variance_limit(const FisherFit& fit) { return fit.alpha * std::numbers::ln2; }

}  // namespace richness::fisher

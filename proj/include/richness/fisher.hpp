#pragma once

#include <cstdint>

namespace richness::fisher {

inline constexpr double kDefaultTolerance = 1e-9;

/// Root of C - alpha * ln(1 + N / alpha) = 0.
struct FisherFit {
  double alpha = 0.0;
  std::uint64_t c_observed = 0;
  std::uint64_t n_observed = 0;
  double residual = 0.0;  // C - alpha * ln(1 + N / alpha) at the returned alpha
};

/// C - alpha * ln(1 + N / alpha).
double log_series_residual(double alpha, std::uint64_t c, std::uint64_t n);

/// Solves the log-series relation for alpha. The left side is strictly
/// increasing in alpha with range (0, N), so a root exists iff 1 <= c < n.
/// Bracketed by doubling from C / ln(1 + N), then refined by Newton steps that
/// fall back to bisection whenever a step would leave the bracket.
/// Throws InvalidInput for c < 1 or tol <= 0, NoFiniteSolution for c >= n.
FisherFit solve_alpha(std::uint64_t c, std::uint64_t n, double tol = kDefaultTolerance);

/// Var(C) = alpha ln((2N + alpha)/(N + alpha)) - alpha^2 N / (N + alpha)^2,
/// evaluated at `n`, which need not equal fit.n_observed.
double variance_of_richness(const FisherFit& fit, std::uint64_t n);

/// The N -> infinity limit of variance_of_richness: alpha ln 2.
double variance_limit(const FisherFit& fit);

}  // namespace richness::fisher

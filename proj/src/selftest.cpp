#include "richness/selftest.hpp"

#include <cmath>

#include "richness/bootstrap.hpp"
#include "richness/fisher.hpp"
#include "richness/inference.hpp"
#include "richness/jackknife.hpp"

namespace richness {

std::string_view bundled_fixture_csv() {
  return "color,count\n"
         "purple,14\n"
         "red,10\n"
         "yellow,10\n"
         "orange,9\n"
         "white,1\n";
}

std::vector<Check> run_selftest(const AbundanceSample& fixture) {
  using inference::Sidedness;
  std::vector<Check> checks;
  auto check = [&](std::string name, double expected, double actual, double tolerance) {
    const bool ok = std::abs(actual - expected) <= tolerance;
    checks.push_back({std::move(name), expected, actual, tolerance, ok});
  };
  constexpr double kRisk = 0.05;

  check("sample.n", 44, static_cast<double>(fixture.total()), 0);
  check("sample.categories", 5, static_cast<double>(fixture.categories()), 0);

  check("quantile.0.975", 1.959964, inference::normal_quantile(0.975), 1e-6);
  check("quantile.0.95", 1.644854, inference::normal_quantile(0.95), 1e-6);

  try {
    const auto fit = fisher::solve_alpha(fixture.categories(), fixture.total());
    check("fisher.alpha", 1.451889, fit.alpha, 1e-5);
    check("fisher.variance_n44", 0.938, fisher::variance_of_richness(fit, 44), 1e-3);
    check("fisher.variance_limit", 1.007, fisher::variance_limit(fit), 1e-3);
    const auto a = inference::upper_bound("fisher", static_cast<double>(fit.c_observed),
                                          fisher::variance_limit(fit), kRisk,
                                          Sidedness::two_sided);
    check("fisher.upper_bound", 6.98, a.upper_bound, 0.05);
    check("fisher.c_max", 7, static_cast<double>(a.c_max), 0);
  } catch (const std::exception&) {
    checks.push_back({"fisher.solve", 0, 0, 0, false});
  }

  struct JackknifeExpect {
    std::uint32_t k;
    double estimate, variance, sd, bound;
    long long c_max;
  };
  // Order 2 bound: 5.9545 + 1.959964 * 0.66015.
  const JackknifeExpect expectations[] = {{1, 5.977, 0.955, 0.9773, 7.89, 8},
                                          {2, 5.9545, 0.4358, 0.6601, 7.2484, 8},
                                          {3, 5.932, 0.270, 0.5194, 6.95, 7}};
  for (const auto& e : expectations) {
    const std::string prefix = "jackknife." + std::to_string(e.k) + ".";
    try {
      const auto en = jackknife::jackknife_enumerated(fixture, e.k);
      const auto cf = jackknife::jackknife_closed_form(fixture, e.k);
      check(prefix + "estimate", e.estimate, en.estimate, 5e-4);
      check(prefix + "variance", e.variance, en.variance, 1e-3);
      check(prefix + "sd", e.sd, std::sqrt(en.variance), 5e-4);
      check(prefix + "closed_form_estimate", en.estimate, cf.estimate,
            1e-10 * std::abs(en.estimate));
      check(prefix + "closed_form_variance", en.variance, cf.variance,
            1e-10 * std::abs(en.variance));
      const auto a = inference::upper_bound("jackknife", en.estimate, en.variance, kRisk,
                                            Sidedness::two_sided);
      check(prefix + "upper_bound", e.bound, a.upper_bound, 1e-2);
      check(prefix + "c_max", static_cast<double>(e.c_max), static_cast<double>(a.c_max), 0);
    } catch (const std::exception&) {
      checks.push_back({prefix + "compute", 0, 0, 0, false});
    }
  }

  const auto exact = bootstrap::bootstrap_moments_exact(fixture);
  check("bootstrap.exact_mean", 4.636275, exact.mean, 1e-4);
  check("bootstrap.exact_variance", 0.231466, exact.variance, 1e-3);
  const auto mc = bootstrap::bootstrap_richness(fixture, {});
  check("bootstrap.estimate", exact.mean, mc.estimate, 0.15);
  check("bootstrap.variance", exact.variance, mc.variance, 0.08);
  const auto two = inference::upper_bound("bootstrap", mc.estimate, mc.variance, kRisk,
                                          Sidedness::two_sided);
  const auto one = inference::upper_bound("bootstrap", mc.estimate, mc.variance, kRisk,
                                          Sidedness::one_sided);
  check("bootstrap.c_max_two_sided", 6, static_cast<double>(two.c_max), 0);
  check("bootstrap.c_max_one_sided", 6, static_cast<double>(one.c_max), 0);
  return checks;
}

}  // namespace richness

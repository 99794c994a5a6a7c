#include "richness/jackknife.hpp"

#include <algorithm>
#include <vector>

#include "richness/combinatorics.hpp"
#include "richness/error.hpp"
#include "richness/kernels.hpp"

namespace richness::jackknife {
namespace {

void check_order(const AbundanceSample& s, std::uint32_t k) {
  if (k == 0) throw InvalidOrder("jackknife order must be at least 1");
  if (k >= s.total()) {
    throw InvalidOrder("jackknife order " + std::to_string(k) + " must be below sample size " +
                       std::to_string(s.total()));
  }
}

}  // namespace

const char* to_string(Mode mode) {
  return mode == Mode::enumerated ? "enumerated" : "closed_form";
}

JackknifeResult jackknife_enumerated(const AbundanceSample& s, std::uint32_t k,
                                     const EnumerationOptions& options) {
  check_order(s, k);
  const std::uint64_t n = s.total();
  const auto subsets = binomial_exact(n, k);
  if (!subsets || *subsets > options.budget) {
    throw BudgetExceeded(binomial_real(n, k), options.budget);
  }

  const auto counts = s.counts();
  std::vector<std::uint64_t> hist;
  const bool par = options.exec == Execution::parallel;
  if (options.walk == Walk::subsets) {
    hist = par ? kernels::vanished_histogram_subsets_omp(counts, k)
               : kernels::vanished_histogram_subsets_serial(counts, k);
  } else {
    hist = par ? kernels::vanished_histogram_compositions_omp(counts, k)
               : kernels::vanished_histogram_compositions_serial(counts, k);
  }

  // hist[d] subsets leave c_i = C - d categories behind.
  const double nd = static_cast<double>(n);
  const double kd = k;
  const double c_obs = static_cast<double>(s.categories());
  auto pseudo = [&](std::size_t d) {
    const double remaining = c_obs - static_cast<double>(d);
    return (nd * c_obs - (nd - kd) * remaining) / kd;
  };
  const double total = static_cast<double>(*subsets);
  double sum = 0.0;
  for (std::size_t d = 0; d < hist.size(); ++d) sum += static_cast<double>(hist[d]) * pseudo(d);
  std::size_t occupied = 0;
  for (auto w : hist) occupied += w != 0 ? 1 : 0;
  // A single occupied bin means identical pseudo-values.
  const double mean = occupied == 1 ? pseudo(static_cast<std::size_t>(
                                          std::find_if(hist.begin(), hist.end(),
                                                       [](std::uint64_t w) { return w != 0; }) -
                                          hist.begin()))
                                    : sum / total;
  double ss = 0.0;
  for (std::size_t d = 0; d < hist.size(); ++d) {
    const double dev = mean - pseudo(d);
    ss += static_cast<double>(hist[d]) * dev * dev;
  }

  JackknifeResult r;
  r.order = k;
  r.estimate = mean;
  r.variance = ss / (nd * (total - kd));
  r.subset_count = subsets;
  r.mode = Mode::enumerated;
  return r;
}

JackknifeResult jackknife_closed_form(const AbundanceSample& s, std::uint32_t k) {
  check_order(s, k);
  const std::uint64_t n = s.total();
  const auto f = frequency_counts(s);

  // Only categories with count <= k can vanish; p(m) = P(m given items all removed).
  std::vector<std::pair<std::uint64_t, double>> classes;  // (f_j, p(j))
  std::vector<std::uint64_t> sizes;
  for (auto [j, fj] : f) {
    if (j > k) break;
    classes.emplace_back(fj, all_removed_probability(n, k, j));
    sizes.push_back(j);
  }

  double mean_d = 0.0;
  double var_d = 0.0;
  double magnitude = 0.0;  // sum of |terms| in var_d, for the zero snap below
  for (std::size_t a = 0; a < classes.size(); ++a) {
    const auto [fa, pa] = classes[a];
    mean_d += static_cast<double>(fa) * pa;
    var_d += static_cast<double>(fa) * pa * (1.0 - pa);
    magnitude += static_cast<double>(fa) * pa * (1.0 - pa);
    for (std::size_t b = 0; b < classes.size(); ++b) {
      const auto [fb, pb] = classes[b];
      const double pairs = static_cast<double>(fa) * static_cast<double>(a == b ? fb - 1 : fb);
      if (pairs == 0.0) continue;
      const double both = all_removed_probability(n, k, sizes[a] + sizes[b]);
      var_d += pairs * (both - pa * pb);
      magnitude += pairs * (both + pa * pb);
    }
  }
  // d is constant (every subset removes the same number of categories) when
  // the terms cancel; keep that variance an exact zero.
  if (var_d <= 1e-13 * magnitude) var_d = 0.0;

  const double nd = static_cast<double>(n);
  const double kd = k;
  const double scale = (nd - kd) / kd;
  const auto exact = binomial_exact(n, k);
  const double subsets = exact ? static_cast<double>(*exact) : binomial_real(n, k);

  JackknifeResult r;
  r.order = k;
  r.estimate = static_cast<double>(s.categories()) + scale * mean_d;
  // Combin * Var_pop(CJ) / (n (Combin - k))
  r.variance = scale * scale * var_d / (nd * (1.0 - kd / subsets));
  r.subset_count = exact;
  r.mode = Mode::closed_form;
  return r;
}

JackknifeResult jackknife(const AbundanceSample& s, std::uint32_t k) {
  check_order(s, k);
  const auto subsets = binomial_exact(s.total(), k);
  if (subsets && *subsets <= kDefaultBudget) return jackknife_enumerated(s, k);
  return jackknife_closed_form(s, k);
}

}  // namespace richness::jackknife

#include "richness/estimate.hpp"

#include <charconv>
#include <cstdint>

#include "richness/error.hpp"
#include "richness/fisher.hpp"
#include "richness/jackknife.hpp"

namespace richness {

std::string MethodSpec::tag() const {
  switch (kind) {
    case MethodKind::fisher: return "fisher";
    case MethodKind::bootstrap: return "bootstrap";
    case MethodKind::bootstrap_exact: return "bootstrap-exact";
    case MethodKind::jackknife: return "jackknife:" + std::to_string(order);
  }
  return {};
}

MethodSpec MethodSpec::parse(const std::string& text) {
  if (text == "fisher") return {MethodKind::fisher, 0};
  if (text == "bootstrap") return {MethodKind::bootstrap, 0};
  if (text == "bootstrap-exact") return {MethodKind::bootstrap_exact, 0};
  const std::string prefix = "jackknife:";
  if (text.starts_with(prefix)) {
    std::uint32_t k = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k >= 1) return {MethodKind::jackknife, k};
  }
  throw InvalidInput("unknown method '" + text + "'");
}

std::vector<MethodSpec> default_methods() {
  return {{MethodKind::fisher, 0},
          {MethodKind::bootstrap, 0},
          {MethodKind::bootstrap_exact, 0},
          {MethodKind::jackknife, 1},
          {MethodKind::jackknife, 2},
          {MethodKind::jackknife, 3}};
}

RichnessEstimate estimate_with(const AbundanceSample& s, const MethodSpec& method,
                               const EstimateOptions& options) {
  RichnessEstimate row;
  row.method = method.tag();
  switch (method.kind) {
    case MethodKind::fisher: {
      const auto fit = fisher::solve_alpha(s.categories(), s.total());
      row.estimate = static_cast<double>(fit.c_observed);
      row.variance = fisher::variance_limit(fit);
      row.params = {{"alpha", fit.alpha},
                    {"residual", fit.residual},
                    {"variance_at_n", fisher::variance_of_richness(fit, s.total())}};
      break;
    }
    case MethodKind::bootstrap: {
      const auto r = bootstrap::bootstrap_richness(s, options.bootstrap, options.exec);
      row.estimate = r.estimate;
      row.variance = r.variance;
      row.params = {{"replicates", std::int64_t{options.bootstrap.replicates}},
                    {"seed", std::to_string(options.bootstrap.seed)}};
      break;
    }
    case MethodKind::bootstrap_exact: {
      const auto m = bootstrap::bootstrap_moments_exact(s);
      row.estimate = m.mean;
      row.variance = m.variance;
      break;
    }
    case MethodKind::jackknife: {
      const auto r = jackknife::jackknife(s, method.order);
      row.estimate = r.estimate;
      row.variance = r.variance;
      row.params = {{"order", std::int64_t{r.order}}, {"mode", jackknife::to_string(r.mode)}};
      if (r.subset_count && *r.subset_count <= static_cast<std::uint64_t>(INT64_MAX)) {
        row.params.emplace_back("subsets", static_cast<std::int64_t>(*r.subset_count));
      }
      break;
    }
  }
  return row;
}

std::vector<inference::ConfidenceAnswer> answers_for(const std::vector<RichnessEstimate>& rows,
                                                     double risk,
                                                     inference::Sidedness sidedness) {
  using inference::Sidedness;
  std::vector<inference::ConfidenceAnswer> out;
  for (const auto& row : rows) {
    if (row.method == "bootstrap") {
      out.push_back(inference::upper_bound(row.method, row.estimate, row.variance, risk,
                                           Sidedness::two_sided));
      out.push_back(inference::upper_bound(row.method, row.estimate, row.variance, risk,
                                           Sidedness::one_sided));
    } else {
      out.push_back(
          inference::upper_bound(row.method, row.estimate, row.variance, risk, sidedness));
    }
  }
  return out;
}

}  // namespace richness

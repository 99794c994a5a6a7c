#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "richness/bootstrap.hpp"
#include "richness/inference.hpp"
#include "richness/parallel.hpp"
#include "richness/sample.hpp"

namespace richness {

using ParamValue = std::variant<std::int64_t, double, std::string>;
using MethodParams = std::vector<std::pair<std::string, ParamValue>>;

/// One row of the estimates table.
struct RichnessEstimate {
  std::string method;  // method tag, see MethodSpec::tag()
  double estimate = 0.0;
  double variance = 0.0;
  MethodParams params;

  friend bool operator==(const RichnessEstimate&, const RichnessEstimate&) = default;
};

enum class MethodKind { fisher, bootstrap, bootstrap_exact, jackknife };

/// Parsed method selector: "fisher", "bootstrap", "bootstrap-exact" or "jackknife:k".
struct MethodSpec {
  MethodKind kind = MethodKind::fisher;
  std::uint32_t order = 0;  // jackknife only

  std::string tag() const;
  static MethodSpec parse(const std::string& text);

  friend bool operator==(const MethodSpec&, const MethodSpec&) = default;
};

/// fisher, bootstrap, bootstrap-exact, jackknife:1..3.
std::vector<MethodSpec> default_methods();

struct EstimateOptions {
  bootstrap::BootstrapConfig bootstrap;
  Execution exec = Execution::parallel;
};

/// Fisher reports the observed C as its estimate with the N -> infinity
/// variance; jackknife enumerates within the default budget and otherwise
/// uses the closed form.
RichnessEstimate estimate_with(const AbundanceSample& s, const MethodSpec& method,
                               const EstimateOptions& options = {});

/// Upper-bound answers for each estimate at the requested sidedness. The
/// Monte-Carlo bootstrap row also gets the opposite sidedness, two-sided first.
std::vector<inference::ConfidenceAnswer> answers_for(const std::vector<RichnessEstimate>& rows,
                                                     double risk,
                                                     inference::Sidedness sidedness);

}  // namespace richness

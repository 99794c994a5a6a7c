#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "richness/sample.hpp"

namespace richness {

/// One stored expectation compared against a freshly computed value.
struct Check {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// The bundled 44-observation fixture (five categories: 14, 10, 10, 9, 1).
std::string_view bundled_fixture_csv();

/// Runs every estimator on `fixture` and compares against the stored values
/// for the bundled fixture.
std::vector<Check> run_selftest(const AbundanceSample& fixture);

}  // namespace richness

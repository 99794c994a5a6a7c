#pragma once

namespace richness {

/// Selects the OpenMP kernel or its serial reference twin. Both produce
/// bit-identical results.
enum class Execution { serial, parallel };

/// Number of OpenMP threads available to parallel kernels (1 without OpenMP).
int max_threads();

}  // namespace richness

#pragma once

namespace richness {

inline constexpr const char* kToolName = "richness";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace richness

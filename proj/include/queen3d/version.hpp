#pragma once

namespace queen3d {

inline constexpr const char* kToolName = "queen3d";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace queen3d

#pragma once

namespace cyclotqft {

inline constexpr const char* kToolName = "cyclotqft";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cyclotqft

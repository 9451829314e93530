#pragma once

namespace hamlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolVersion = "hamlab 0.1.0";

}  // namespace hamlab

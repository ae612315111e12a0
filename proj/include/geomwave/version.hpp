#pragma once

namespace geomwave {

inline constexpr const char* kToolName = "geomwave";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace geomwave

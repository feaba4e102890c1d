#pragma once

namespace cmnd {

inline constexpr const char* kToolName = "cmnd";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cmnd

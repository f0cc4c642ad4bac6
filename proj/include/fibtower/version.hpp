#pragma once

namespace fibtower {

inline constexpr const char* kToolVersion = "fibtower 0.1.0";

}  // namespace fibtower

#pragma once

namespace renorm {

inline constexpr const char* kToolVersion = "renorm 0.1.0";

}  // namespace renorm

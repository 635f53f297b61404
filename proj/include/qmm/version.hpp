#pragma once

namespace qmm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qmm

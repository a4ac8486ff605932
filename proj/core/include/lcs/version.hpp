#pragma once

namespace lcs {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace lcs

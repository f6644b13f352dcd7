#pragma once

namespace botsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace botsim

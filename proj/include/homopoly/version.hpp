#pragma once

namespace homopoly {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace homopoly

#pragma once

namespace pminet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pminet

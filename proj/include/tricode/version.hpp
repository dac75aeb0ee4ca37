#pragma once

namespace tricode {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tricode

#pragma once

namespace axmul {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace axmul

#pragma once

namespace katalan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace katalan

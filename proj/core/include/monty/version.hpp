#pragma once

namespace monty {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace monty

#pragma once

namespace ordered_ramsey {

inline constexpr const char* k_version = "0.1.0";

}  // namespace ordered_ramsey

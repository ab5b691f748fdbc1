#pragma once

namespace lbranch {
inline constexpr const char* version = "0.1.0";
}

#pragma once

namespace resint {
inline constexpr const char* kToolVersion = "1.0.0";
}

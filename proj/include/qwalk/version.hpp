#pragma once

namespace qwalk {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace qwalk

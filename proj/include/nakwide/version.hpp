#pragma once

namespace nakwide {
inline constexpr const char* kVersion = "0.1.0";
}

#pragma once

namespace tgl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tgl

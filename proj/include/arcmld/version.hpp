#pragma once

namespace arcmld {

// Bumping this invalidates every cache entry.
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace arcmld

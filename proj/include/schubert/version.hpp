#pragma once

namespace schubert {

/// Bumped whenever cached tables or exported files could change.
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace schubert

#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification or math
// failure (including I/O and cache corruption), 2 usage error.

#include <ostream>

namespace schubert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Default window cap when neither --max-n nor SCHUBERT_MAX_N is given.
inline constexpr int kDefaultMaxN = 6;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schubert

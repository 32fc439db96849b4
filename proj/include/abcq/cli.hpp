#pragma once

#include <iosfwd>

namespace abcq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitResource = 2;

// Entry point of the `abcq` tool; writes results to `out` and diagnostics
// to `err`.  Exit 0 on success, 1 on validation errors (including unknown
// flags), 2 when a resource budget is exceeded.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abcq

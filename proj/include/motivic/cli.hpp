#pragma once

#include <iosfwd>

namespace motivic::cli {

inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitCrossCheck = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motivic::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tavis::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitTruncation = 3;
inline constexpr int kExitDimensionCap = 4;

// Entry point of `tavis-sim`; args excludes the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tavis::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace russell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args exclude the program name). Expressions not
/// given by --expr are read from `in`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace russell::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mag::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not a MAG, not equivalent
inline constexpr int kUsage = 2;     // bad flags, unreadable input, rejected move

/// Runs one magtool invocation. `args` excludes the program name. Graph
/// arguments name a JSON or DOT file, or "-" for `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mag::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). A graph argument
/// of "-" reads from `in`; results go to `out` unless -o names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pairwalk::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posguess::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Standard streams are
/// passed in so the whole tool can be driven in-process.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace posguess::cli

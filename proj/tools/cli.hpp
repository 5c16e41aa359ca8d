#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace findex::cli {

/// Exit codes: 0 success, 1 a VIOLATED record under --strict, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

/// Runs the findex command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace findex::cli

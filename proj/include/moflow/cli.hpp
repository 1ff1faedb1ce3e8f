#ifndef MOFLOW_CLI_HPP
#define MOFLOW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace moflow::cli {

// Exit codes: 0 success, 2 usage or parse error, 3 semantic violation,
// 4 resource cap exceeded, 5 internal invariant failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSemantic = 3;
inline constexpr int kExitResource = 4;
inline constexpr int kExitInternal = 5;

//! Runs a command line (without the program name) against the given
//! streams; returns the exit code. All commands write deterministic,
//! line-delimited records to out (unless --timing is given).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace moflow::cli

#endif

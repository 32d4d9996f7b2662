#ifndef HZSUMS_CLI_APP_HPP
#define HZSUMS_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hzs::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with argv-style arguments (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hzs::cli

#endif

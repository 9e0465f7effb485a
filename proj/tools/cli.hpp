#ifndef MUTALAB_TOOLS_CLI_HPP
#define MUTALAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mutalab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Never calls exit().
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mutalab::cli

#endif  // MUTALAB_TOOLS_CLI_HPP

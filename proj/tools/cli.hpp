#ifndef TQMEAN_TOOLS_CLI_HPP
#define TQMEAN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tqmean::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success, 1 when a theorem case or probe fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tqmean::cli

#endif

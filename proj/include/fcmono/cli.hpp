#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcmono {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitIdentityFailure = 1,
  kExitUsage = 2,
  kExitUndefined = 3,
};

/// Default group-enumeration budget, overridden by FCMONO_ENUM_BUDGET.
inline constexpr std::size_t kDefaultEnumBudget = 5000;

/// Runs the tool on `args` (without the program name). JSON goes to `out`
/// unless --out names a file; messages go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcmono

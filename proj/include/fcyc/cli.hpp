#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fcyc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

/// Runs one fcyc command. `args` excludes the program name. Returns 0 on
/// success, 2 on usage or input errors, 3 on budget or verification failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcyc

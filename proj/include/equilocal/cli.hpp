#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equilocal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFilterFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAssertionBreach = 3;

/// Runs one command line. `args` excludes the program name. File arguments
/// equal to "-" read from `in`; JSON goes to `out`, summaries to `err`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace equilocal::cli

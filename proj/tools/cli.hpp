#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "splitcount/errors.hpp"

namespace splitcount::cli {

inline constexpr const char *kToolName = "splitcount";
inline constexpr const char *kToolVersion = "0.1.0";

/// 1 for invariant violations, 2 for usage errors.
int exit_code(ErrorCode code);

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace splitcount::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace soergel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Data goes to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soergel::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lbext::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kTrue = 0;     // equal / closable / conjugate / ok
inline constexpr int kFalse = 1;    // unequal / not closable / distinguished / selftest failure
inline constexpr int kError = 2;    // bad arguments, parse or index errors
inline constexpr int kUnknown = 3;  // conj: no witness within the radius

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lbext::cli

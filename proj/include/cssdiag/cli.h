#ifndef CSSDIAG_CLI_H
#define CSSDIAG_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace cssdiag {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name) and returns the exit code:
/// 0 for success or a true verdict, 1 for a false verdict, 2 for bad input.
/// The JSON report goes to out, diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cssdiag

#endif

#ifndef GPSC_CLI_HPP_
#define GPSC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gpsc::cli {

// Process exit codes.
inline constexpr int kYes = 0;  // also true / ok
inline constexpr int kNo = 1;   // also false
inline constexpr int kUndetermined = 2;
inline constexpr int kInputError = 3;

// Runs one command; `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace gpsc::cli

#endif  // GPSC_CLI_HPP_

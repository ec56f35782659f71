// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#ifndef LOOPHOM_CLI_HPP
#define LOOPHOM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace loophom {

/// `args` excludes the program name. Primary output goes to `out` (or the
/// --out file), progress and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loophom

#endif

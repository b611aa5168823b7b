#ifndef EXPPELL_CLI_HPP
#define EXPPELL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace exppell {

/// Runs the exppell tool: args are the command-line arguments without the
/// program name. Writes results (JSON, or an S-expression for `compile`)
/// to out and usage errors to err. Returns 0 on success, 1 on domain
/// errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace exppell

#endif

// cli.hpp: command-line front end. Exit code 0 on success, 1 on domain
// errors, 2 on usage errors; all diagnostics go to the error stream.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gl2 {

// args excludes the program name, e.g. {"index", "--ell", "13", ...}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gl2

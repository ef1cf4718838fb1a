#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace csep {

/// Runs the command line front end; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csep

#pragma once

/// @file cli.hpp
/// @brief Command-line front end. Exit codes: 0 ok, 1 verification or
/// internal failure, 2 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace symcirc {

/// Runs one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcirc

#ifndef TFGABOR_CLI_HPP
#define TFGABOR_CLI_HPP

#include <string>
#include <vector>

#include "tfgabor/twisted.hpp"

namespace tfg::cli {

/// Exit codes: 0 success, 2 validation error, 3 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Parses terms like "e - 0.5*d(1,0) + d(0,1)" into a twisted sequence.
twisted::TwistedSequence parse_sequence(const std::string& text, double gamma);

/// Runs one subcommand; argv excludes the program name.
int run(const std::vector<std::string>& argv);

}  // namespace tfg::cli

#endif

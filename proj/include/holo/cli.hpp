#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace holo {

// Runs the command-line surface; returns the process exit code.
//   0 success, 2 invalid input, 3 exhaustive-but-empty search, 4 domain error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "30deg", "1.2rad", "1/12tau" or "0.25tau" into radians.
double parse_angle(const std::string& text);

}  // namespace holo

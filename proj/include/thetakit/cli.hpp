#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetakit {

/// Runs the command-line surface. Exit codes: 0 pass, 1 fail-with-witness,
/// 2 undecided-at-bound, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetakit

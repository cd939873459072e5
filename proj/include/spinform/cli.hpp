// Command-line front end; factored out of main() so tests can drive it.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinform {

// Exit status 0 on success, 1 for usage and domain errors (structured error on
// the error stream), 2 for verification failures (mismatch report on the
// output stream).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinform

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfock {

// Runs one command line (without the program name). Results go to out,
// diagnostics to err. Returns the exit status: 0 success, 1 verification
// failure, 2 usage or input error. Output is byte-deterministic for fixed
// arguments.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfock

#ifndef JACRES_CLI_HPP
#define JACRES_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace jacres::cli {

// Runs one batch command.  Exit codes: 0 computed, 2 inconclusive (resource
// cap), 3 invalid input, 4 asserted invariant violated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jacres::cli

#endif

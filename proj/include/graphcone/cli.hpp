#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcone {

// Command-line driver.  Exit codes: 0 success, 1 domain error (the message
// names the violated invariant), 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

} // namespace graphcone

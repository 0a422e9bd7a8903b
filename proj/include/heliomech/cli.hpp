#ifndef HELIOMECH_CLI_HPP
#define HELIOMECH_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

// Batch frontend.  Exit codes: 0 success, 1 invalid config/usage,
// 2 numerical failure, 3 reproduction-suite golden failure.

namespace heliomech {

int run_command(const std::vector<std::string>& args,
                std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace heliomech

#endif

#ifndef MLOB_CLI_HPP
#define MLOB_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace mlob::cli {

/// Runs the command line. Exit status 0 = YES/success, 1 = NO, 2 = usage or
/// input error.
int run(std::vector<std::string> args, std::istream& in = std::cin,
        std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace mlob::cli

#endif

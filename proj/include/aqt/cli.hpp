#ifndef AQT_CLI_HPP
#define AQT_CLI_HPP

#include <iostream>

namespace aqt {

// Entry point of the `aqt` command-line tool. Streams are injectable for
// testing. Returns 0 on success, 1 on numerical failure, 2 on usage or
// filesystem errors.
int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace aqt

#endif

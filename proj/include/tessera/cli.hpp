// cli.hpp - command-line front end (orbit, period, level, necklace, verify,
// render, fractal)
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tessera {

// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tessera

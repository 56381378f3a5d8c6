// cli.hpp
// Command-line front end. run_cli is the whole program; the binary's main()
// only forwards, so tests can drive every subcommand in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starcrit::cli {

// Exit codes: 0 success / claim holds, 1 claim fails / counterexample,
// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace starcrit::cli

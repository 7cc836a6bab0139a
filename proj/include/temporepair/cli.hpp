#ifndef TEMPOREPAIR_CLI_HPP
#define TEMPOREPAIR_CLI_HPP

// Command-line front end. Exposed as a function so tests can drive full
// invocations in-process.
//
// Exit codes: 0 consistent or success, 1 inconsistent, 2 usage, parse, or
// validation error, 3 budget exhausted.

namespace temporepair {

int run_cli(int argc, const char* const* argv);

}  // namespace temporepair

#endif  // TEMPOREPAIR_CLI_HPP

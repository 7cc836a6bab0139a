#ifndef TEMPOREPAIR_LOG_HPP
#define TEMPOREPAIR_LOG_HPP

#include <string>

namespace temporepair {

enum class LogLevel : unsigned char { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Active level, read once from the TEMPOREPAIR_LOG environment variable
/// (error | warn | info | debug). Unset or unrecognized means Warn.
LogLevel log_level();

/// Writes "temporepair: <level>: <message>\n" to stderr when `level` is
/// enabled. Diagnostics never go to stdout.
void log(LogLevel level, const std::string& message);

}  // namespace temporepair

#endif  // TEMPOREPAIR_LOG_HPP

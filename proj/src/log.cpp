#include "temporepair/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace temporepair {

static LogLevel parse_level() {
  const char* raw = std::getenv("TEMPOREPAIR_LOG");
  if (raw == nullptr) return LogLevel::Warn;
  if (std::strcmp(raw, "error") == 0) return LogLevel::Error;
  if (std::strcmp(raw, "warn") == 0) return LogLevel::Warn;
  if (std::strcmp(raw, "info") == 0) return LogLevel::Info;
  if (std::strcmp(raw, "debug") == 0) return LogLevel::Debug;
  return LogLevel::Warn;
}

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

void log(LogLevel level, const std::string& message) {
  if (static_cast<unsigned>(level) > static_cast<unsigned>(log_level())) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "temporepair: %s: %s\n",
               names[static_cast<unsigned>(level)], message.c_str());
}

}  // namespace temporepair

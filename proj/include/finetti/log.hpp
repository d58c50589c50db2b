#pragma once

#include <string_view>

namespace finetti {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Threshold parsed once from the FINETTI_LOG environment variable
// (error|warn|info|debug). Defaults to warn.
LogLevel log_level();

// Writes one line to stderr when `level` is enabled. Data streams
// (stdout, output files) never receive diagnostics.
void log_message(LogLevel level, std::string_view message);

inline void log_error(std::string_view msg) { log_message(LogLevel::Error, msg); }
inline void log_warn(std::string_view msg) { log_message(LogLevel::Warn, msg); }
inline void log_info(std::string_view msg) { log_message(LogLevel::Info, msg); }
inline void log_debug(std::string_view msg) { log_message(LogLevel::Debug, msg); }

}  // namespace finetti

#include "finetti/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace finetti {

namespace {

LogLevel parse_level() {
    const char* env = std::getenv("FINETTI_LOG");
    if (env == nullptr) return LogLevel::Warn;
    const std::string v(env);
    if (v == "error") return LogLevel::Error;
    if (v == "warn") return LogLevel::Warn;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

const char* level_tag(LogLevel level) {
    switch (level) {
        case LogLevel::Error: return "error";
        case LogLevel::Warn: return "warn";
        case LogLevel::Info: return "info";
        case LogLevel::Debug: return "debug";
    }
    return "?";
}

}  // namespace

LogLevel log_level() {
    static const LogLevel level = parse_level();
    return level;
}

void log_message(LogLevel level, std::string_view message) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    std::fprintf(stderr, "[finetti:%s] %.*s\n", level_tag(level),
                 static_cast<int>(message.size()), message.data());
}

}  // namespace finetti

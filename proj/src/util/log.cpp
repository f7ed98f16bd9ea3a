#include "util/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace rf {

static LogLevel parse_level() {
    const char* e = std::getenv("RF_LOG");
    if (!e) return LogLevel::Warn;
    if (std::strcmp(e, "error") == 0) return LogLevel::Error;
    if (std::strcmp(e, "warn") == 0) return LogLevel::Warn;
    if (std::strcmp(e, "info") == 0) return LogLevel::Info;
    if (std::strcmp(e, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
}

LogLevel log_level() {
    static LogLevel lvl = parse_level();
    return lvl;
}

void log_msg(LogLevel level, const std::string& msg) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    static std::mutex mu;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::lock_guard<std::mutex> lock(mu);
    std::fprintf(stderr, "[rf:%s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

}  // namespace rf

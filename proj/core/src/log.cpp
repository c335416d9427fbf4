#include "klab/log.hpp"

#include <cstdlib>
#include <cstring>

namespace klab {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("KAEHLER_LAB_LOG");
        if (env == nullptr) return LogLevel::Error;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        if (std::strcmp(env, "info") == 0) return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

namespace detail {
void log_line(LogLevel level, const std::string& text) {
    const char* tag = level == LogLevel::Debug ? "debug" : "info";
    std::cerr << "[" << tag << "] " << text << "\n";
}
} // namespace detail

} // namespace klab

#pragma once

#include <iostream>
#include <sstream>
#include <string>

namespace klab {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

// Level comes from KAEHLER_LAB_LOG (error|info|debug), default error.
LogLevel log_level();

namespace detail {
void log_line(LogLevel level, const std::string& text);
}

template <typename... Args>
void log_info(Args&&... args) {
    if (log_level() < LogLevel::Info) return;
    std::ostringstream os;
    (os << ... << args);
    detail::log_line(LogLevel::Info, os.str());
}

template <typename... Args>
void log_debug(Args&&... args) {
    if (log_level() < LogLevel::Debug) return;
    std::ostringstream os;
    (os << ... << args);
    detail::log_line(LogLevel::Debug, os.str());
}

} // namespace klab

#pragma once

#include <stdexcept>
#include <string>

namespace klab {

// All library failures carry a stable machine-readable code next to the
// human-readable message, so the CLI can map them to exit diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

} // namespace klab

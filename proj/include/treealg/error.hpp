#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace treealg {

// All recoverable failures carry a stable machine-checkable kind
// ("SyntaxError", "CycleDetected", ...) next to the human-readable message.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
    throw error(std::move(kind), message);
}

}  // namespace treealg

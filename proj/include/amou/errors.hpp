#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace amou {

// Domain error with a stable machine-readable kind tag ("NotHermitian",
// "ShapeMismatch", ...). The CLI maps kinds to exit codes; tests match on them.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace amou

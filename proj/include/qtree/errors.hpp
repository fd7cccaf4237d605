#pragma once

#include <stdexcept>
#include <string>

namespace qtree {

// Input could not be parsed (CLI exit code 2).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input parsed but is semantically inconsistent (CLI exit code 3).
struct InconsistentInput : std::runtime_error {
    explicit InconsistentInput(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource bound was exceeded (CLI exit code 4).
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qtree

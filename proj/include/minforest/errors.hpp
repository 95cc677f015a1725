#pragma once

#include <stdexcept>
#include <string>

namespace minforest {

/// Violation of an operation's contract (bad subset, wrong tree count, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or product blew past an implementation cap.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed graph document; position is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line;
    int col;
};

}  // namespace minforest

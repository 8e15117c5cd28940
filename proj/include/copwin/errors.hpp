#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace copwin {

// Contract violations on otherwise well-formed values: unknown vertex,
// disconnected graph where connectivity is required, out-of-range
// generator parameters, and the like.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph files, ordinal strings, generator specs).
// Positions are 1-based; line 0 means "single-line input" and only the
// column is meaningful.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(line > 0
                                 ? message + " (line " + std::to_string(line) + ", col " +
                                       std::to_string(column) + ")"
                                 : message + " (position " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace copwin

#pragma once

#include <stdexcept>
#include <string>

namespace racgk {

// A violated domain precondition (bad parameter range, empty graph, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text: graph files, rational literals, q specifications.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace racgk

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tlaut {

enum class ErrorCode {
    Syntax,
    Duplicate,
    UnknownName,
    ConflictingEnd,
    InvalidAutomaton,
    WrongKind,
    Nondeterministic,
    AlphabetMismatch,
    OverlappingAlphabet,
    NonUnary,
    BudgetExceeded,
    BadWord,
    Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Error raised while reading TLA text. `line()` is 1-based; 0 means the
/// problem is not attached to a single line (e.g. a missing declaration).
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, const std::string& message)
        : Error(code, line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace tlaut

// errors.hpp
//
// Error taxonomy shared by the library and the CLI. Each kind maps to a
// distinct process exit code so batch callers can dispatch on failures.

#ifndef DIFFALG_ERRORS_HPP
#define DIFFALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diffalg {

enum class ErrorKind {
    Parse,      // malformed input text (position-annotated where possible)
    Signature,  // operands built over different ring signatures
    Argument,   // invalid option or operand (empty systems, bad budgets, ...)
    Budget,     // completion budget exhausted
    Internal    // broken invariant; always a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::move(message)), kind_(kind), line_(line), column_(column) {}

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }      // 1-based, 0 = not applicable
    int column() const { return column_; }  // 1-based, 0 = not applicable

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, int line = 0, int column = 0) {
    throw Error(kind, message, line, column);
}

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return 2;
        case ErrorKind::Signature: return 3;
        case ErrorKind::Argument: return 3;
        case ErrorKind::Budget: return 4;
        case ErrorKind::Internal: return 5;
    }
    return 5;
}

}  // namespace diffalg

#endif

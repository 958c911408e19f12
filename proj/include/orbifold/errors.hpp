#pragma once

#include <stdexcept>
#include <string>

namespace orbifold {

// Every library failure carries a category that the CLI maps to an exit code.
enum class ErrorKind { Parse, Precondition, Guard };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail) : std::runtime_error(detail), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& detail) : Error(ErrorKind::Parse, detail) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& detail) : Error(ErrorKind::Precondition, detail) {}
};

class GuardError : public Error {
public:
    explicit GuardError(const std::string& detail) : Error(ErrorKind::Guard, detail) {}
};

}  // namespace orbifold

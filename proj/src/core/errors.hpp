#pragma once

#include <stdexcept>
#include <string>

namespace stratifold {

enum class ErrorKind {
    Argument,      // bad parameter value
    Parse,         // malformed graph document
    InvalidGraph,  // graph fails validate()
    Precondition,  // operation not defined on this input
    Internal,      // invariant violation inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace stratifold

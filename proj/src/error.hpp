#pragma once

#include <stdexcept>
#include <string>

namespace pcfa {

enum class ErrorKind {
    Parse,         // malformed input file or text
    Precondition,  // operation called on inputs violating its contract
    Verification,  // a certified check or reconstruction failed
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) {
    throw Error(ErrorKind::Parse, msg);
}

[[noreturn]] inline void throw_precondition(const std::string& msg) {
    throw Error(ErrorKind::Precondition, msg);
}

[[noreturn]] inline void throw_verification(const std::string& msg) {
    throw Error(ErrorKind::Verification, msg);
}

}  // namespace pcfa

#pragma once

#include <stdexcept>
#include <string>

namespace entrobound {

enum class ErrorKind {
    InvalidParameter,
    InvalidInput,
    EmptySupport,
    InvalidCover,
    NotRegular,
    Precondition,
    TooLarge,
    NotInRange,
    Unsupported,
    InternalInvariant,
    Parse,
    Io,
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::EmptySupport: return "empty-support";
    case ErrorKind::InvalidCover: return "invalid-cover";
    case ErrorKind::NotRegular: return "not-regular";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::NotInRange: return "not-in-range";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::InternalInvariant: return "internal-invariant-violation";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

} // namespace entrobound

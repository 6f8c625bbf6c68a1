#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superjac {

enum class ErrorKind {
    NotPrime,
    ContextMismatch,
    NotSeparable,
    BadCharacteristic,
    PrecisionExhausted,
    UnsupportedCollision,
    ZeroFunction,
    RootsUnavailable,
    CheckFailed,
    OracleMismatch,
    RequiresD1,
    ZeroShift,
    BudgetExceeded,
    CharacterUnavailable,
    NonIntegerResult,
    InvariantViolation,
    IncompleteEnumeration,
    HypothesisFailed,
    EvidenceFailed,
    InvalidArgument,
    Unsupported,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
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

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what)
{
    if (!cond)
        fail(kind, what);
}

} // namespace superjac

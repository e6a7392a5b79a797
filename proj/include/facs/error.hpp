#pragma once

#include <stdexcept>
#include <string>

namespace facs {

// Failure categories used across modules. Several of these (NotDivisible,
// NonTerminating, NonIntegerResult) signal an implementation fault rather
// than bad input; they are thrown instead of asserted so tests can observe
// them.
enum class Errc {
    NotDivisible,
    UnassignedVariable,
    NotContained,
    TooLong,
    SizeMismatch,
    IndexOutOfRange,
    ZeroDenominator,
    NotSymmetric,
    NonTerminating,
    NonIntegerResult,
    OutOfWindow,
    Usage,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace facs

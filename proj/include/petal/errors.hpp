#pragma once

#include <stdexcept>
#include <string>

namespace petal {

enum class Err {
    Empty,
    NotBijection,
    EvenPetalCount,
    TooSmall,
    TooLarge,
    IndexOutOfRange,
    NotStrictlyOrdered,
    InvalidResolution,
    NotStandard,
    OpenCurve,
    DegenerateSegment,
    NonIntegerTurning,
    OpenTangle,
    ComponentCountNotOne,
    TooManyCrossings,
    NoAdjacentPair,
    ParseError,
};

/// Single exception type for the whole library; carries a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace petal

#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZeroError : Error {
    using Error::Error;
};
struct InexactDivisionError : Error {
    using Error::Error;
};
struct UnassignedVariableError : Error {
    using Error::Error;
};
struct ZeroAssignedToInvertedVariableError : Error {
    using Error::Error;
};
struct WindowOutOfBandError : Error {
    using Error::Error;
};
struct NotClosingError : Error {
    explicit NotClosingError(const std::string& msg, long long index = -1)
        : Error(msg), failing_index(index) {}
    long long failing_index;  // continuant window start that failed to close
};
struct NonPositiveEntryError : Error {
    using Error::Error;
};
struct ShapeMismatchError : Error {
    using Error::Error;
};
struct OrderMismatchError : Error {
    using Error::Error;
};
struct NotACCFriezeError : Error {
    using Error::Error;
};
struct NotADiagonalError : Error {
    using Error::Error;
};
struct FrozenDirectionError : Error {
    using Error::Error;
};
struct LaurentViolationError : Error {
    using Error::Error;
};
struct LoopOrTwoCycleError : Error {
    using Error::Error;
};
struct BoundExceededError : Error {
    using Error::Error;
};
struct UnknownClusterError : Error {
    using Error::Error;
};
struct UnknownTypeError : Error {
    using Error::Error;
};
struct NoSliceFoundError : Error {
    using Error::Error;
};
struct SummandHasNoModuleError : Error {
    using Error::Error;
};
struct InvalidTiltingError : Error {
    using Error::Error;
};
struct UnmatchedPlueckerError : Error {
    using Error::Error;
};
struct IndexCollisionError : Error {
    using Error::Error;
};
struct WindowTooNarrowError : Error {
    using Error::Error;
};
struct NonIntegralEntryError : Error {
    using Error::Error;
};
struct DiagonalOutOfWindowError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace frieze

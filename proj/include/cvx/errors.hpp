#pragma once

#include <stdexcept>
#include <string>

namespace cvx {

// Base class for everything the library throws. The CLI maps any of these
// to exit code 2 with the message on stderr.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

struct NonPositiveDenominator : Error {
    using Error::Error;
};

struct NonPositiveValue : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct InvalidPointSeq : Error {
    using Error::Error;
};

struct DegenerateChord : Error {
    using Error::Error;
};

struct OutOfDomain : Error {
    using Error::Error;
};

struct EmptyInterval : Error {
    using Error::Error;
};

// Raised when the brute-force checker contradicts itself; always a bug.
struct OracleInconsistency : Error {
    using Error::Error;
};

}  // namespace cvx

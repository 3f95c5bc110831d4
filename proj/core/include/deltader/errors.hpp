#pragma once

#include <stdexcept>
#include <string>

namespace deltader {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Field mismatch, unsupported characteristic, or malformed scalar text.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Inconsistent dimensions or tensor shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// The second product {,} was requested but the algebra has none.
class MissingOperationError : public Error {
public:
    using Error::Error;
};

/// Grading absent where required, violated, or an element of mixed parity.
class GradingError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// An algebra failed a precondition on its identities (e.g. lie_double on a non-Lie input).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace deltader

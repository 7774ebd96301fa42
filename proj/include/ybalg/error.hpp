#pragma once

#include <stdexcept>
#include <string>

namespace ybalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Colour values at which an inverse formula is undefined (pu = qv, x = q, ...).
class SingularColour : public Error {
public:
    using Error::Error;
};

/// A parameter that must be nonzero (p, q, s, x) was zero.
class ZeroParameter : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic was asked for p^u with a non-integer u.
class NonIntegerExponent : public Error {
public:
    using Error::Error;
};

class UnknownKind : public Error {
public:
    using Error::Error;
};

}  // namespace ybalg

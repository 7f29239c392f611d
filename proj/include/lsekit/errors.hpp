#pragma once

#include <stdexcept>
#include <string>

namespace lsekit {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimension or shape mismatch between operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration value (forgetting factor out of range, bad scales, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Operation requires at least one sample but none were given.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Non-finite (NaN/Inf) values where only finite reals are admitted.
class DataError : public Error {
public:
    using Error::Error;
};

/// A matrix or update denominator is numerically singular.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// A numerical routine failed (SVD did not converge, gain lost positive
/// definiteness, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Malformed text input; the message carries the offending line number.
class ParseError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace lsekit

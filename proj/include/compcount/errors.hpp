#pragma once

#include <stdexcept>
#include <string>

namespace compcount {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// binomial(a, b) with a < 0 <= b.
class NegativeUpperIndex : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exponential oracle was asked for a size beyond its configured limit.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (alphabet specs, matrix grids).
class ParseError : public Error {
public:
    using Error::Error;
};

/// No explicit formula is known for the requested alphabet.
class UnsupportedClosedForm : public Error {
public:
    using Error::Error;
};

} // namespace compcount

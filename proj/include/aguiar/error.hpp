#pragma once

#include <stdexcept>
#include <string>

namespace aguiar {

// Base for every failure raised by the library. Anything deriving from Error
// is a domain problem with the inputs or the environment (the CLI maps it to
// exit code 1); logic_error-style bugs surface as ArithmeticError.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Mismatched weights or degrees where an operation requires equality.
struct DomainError : Error {
    using Error::Error;
};

// Configured degree limit or scan cost guard exceeded.
struct LimitExceeded : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

// A quotient that must be exact was not. Always indicates corrupted tables or
// a bug, never a property of valid inputs.
struct ArithmeticError : Error {
    using Error::Error;
};

struct CacheError : Error {
    using Error::Error;
};

} // namespace aguiar

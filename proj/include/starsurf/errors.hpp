#pragma once

#include <stdexcept>
#include <string>

namespace starsurf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary operation on scalars with different hbar truncation orders.
struct OrderMismatchError : Error {
    using Error::Error;
};

// Scalar or metric whose body vanishes, or a symbolic element whose
// star-reciprocal has no star-word representation.
struct NotInvertibleError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col) {}
    int line = 0;
    int col = 0;
};

// Surface spec that parses but violates a semantic rule (parity law,
// undeclared identifier, malformed section, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Missing or ill-typed atom binding during substitution.
struct BindingError : Error {
    using Error::Error;
};

} // namespace starsurf

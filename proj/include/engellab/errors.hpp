#pragma once

#include <stdexcept>
#include <string>

namespace engellab {

// Base for every error this library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text: bad scalar strings, bad JSON, out-of-range indices,
// duplicate product keys. CLI maps these to exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// Failure to read or write a file. Exit code 2 as well.
struct IoError : Error {
    using Error::Error;
};

// Two values from different ground fields met in one operation.
struct FieldMismatch : Error {
    using Error::Error;
};

// Vector/matrix/subspace shapes do not line up.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A matrix required to be invertible is not.
struct SingularMatrix : Error {
    using Error::Error;
};

// Two supposedly equivalent computation routes disagreed. Always a bug.
struct InternalCheckFailure : Error {
    using Error::Error;
};

} // namespace engellab

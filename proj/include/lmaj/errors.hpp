// errors.hpp — exception hierarchy shared by all lmaj headers.

#pragma once

#include <stdexcept>
#include <string>

namespace lmaj {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative eigensolver exceeded its sweep budget.
struct NonConvergence : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// Negative/zero power of a singular (or non-PD) matrix requested.
struct SingularPower : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidDim : Error {
    using Error::Error;
};

struct ZeroMatrix : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Malformed matrix text input; carries 1-based line/column of the offending token.
struct HmatParseError : Error {
    int line;
    int column;
    HmatParseError(int line_, int column_, const std::string& what_)
        : Error("hmat parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace lmaj

#pragma once

#include <stdexcept>
#include <string>

namespace splitsolve {

/// Base class for every failure raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A point lies outside the domain of a mapping or set operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Arithmetic produced NaN or Inf. Raised eagerly instead of letting
/// non-finite values propagate through an iteration.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter value or malformed configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* context) {
    if (a != b) {
        throw DimensionError(std::string(context) + ": dimension mismatch (" +
                             std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace splitsolve

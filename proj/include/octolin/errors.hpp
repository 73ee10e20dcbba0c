#ifndef OCTOLIN_ERRORS_HPP
#define OCTOLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace octolin {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A value is outside the mathematical domain of an operation
/// (zero divisor, non-unit scalar where a unit is required, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Shape violations: length mismatch, non-square matrix, too many vectors.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// An input fails a structural precondition of a classification routine
/// (not an isometry, not weak associative, page mismatch, ...).
class ClassificationError : public Error {
public:
    explicit ClassificationError(const std::string& what) : Error(what) {}
};

/// Malformed serialized input (wrong JSON shape, wrong arity, non-numbers).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace octolin

#endif // OCTOLIN_ERRORS_HPP

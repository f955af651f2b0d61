#ifndef FRECHET_JL_ERRORS_HPP
#define FRECHET_JL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frechet_jl {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for bad arguments and malformed data (CLI exit code 1).
class ValidationError : public Error {
public:
    using Error::Error;
};

class EmptyCurve : public ValidationError {
public:
    EmptyCurve() : ValidationError("curve has no vertices") {}
};

class DimensionMismatch : public ValidationError {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual)
        : ValidationError("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                          std::to_string(actual)),
          expected_(expected),
          actual_(actual) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

class NonFiniteCoordinate : public ValidationError {
public:
    NonFiniteCoordinate(std::size_t vertex, std::size_t coordinate)
        : ValidationError("non-finite coordinate at vertex " + std::to_string(vertex) +
                          ", coordinate " + std::to_string(coordinate)) {}
};

class ParseError : public ValidationError {
public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what)
        : ValidationError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Filesystem failures (CLI exit code 2).
class IoError : public Error {
public:
    using Error::Error;
};

class InvalidEpsilon : public ValidationError {
public:
    explicit InvalidEpsilon(double eps)
        : ValidationError("epsilon out of range: " + std::to_string(eps)) {}
};

class InsufficientData : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptySet : public ValidationError {
public:
    EmptySet() : ValidationError("curve set is empty") {}
};

class NoEligiblePair : public ValidationError {
public:
    NoEligiblePair() : ValidationError("no curve pair satisfies the cost-gap premise") {}
};

class DimensionTooSmall : public ValidationError {
public:
    DimensionTooSmall(std::size_t minimum, std::size_t actual)
        : ValidationError("dimension " + std::to_string(actual) + " below minimum " +
                          std::to_string(minimum)) {}
};

/// A distance failure inside a batch, tagged with the pair that raised it.
class PairError : public Error {
public:
    PairError(std::size_t i, std::size_t j, const std::string& what)
        : Error("pair (" + std::to_string(i) + ", " + std::to_string(j) + "): " + what),
          first_(i),
          second_(j) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

}  // namespace frechet_jl

#endif

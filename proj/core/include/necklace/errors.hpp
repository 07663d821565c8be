#pragma once

#include <stdexcept>
#include <string>

namespace necklace {

/// Mismatched vector/matrix dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A zero homology class defines no double cover.
class InvalidCoverError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A curve class that must be nonzero is zero.
class InvalidCurveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Power iteration exhausted its budget; carries the last residual.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual, long iterations)
        : std::runtime_error(what), residual(residual), iterations(iterations) {}

    double residual;
    long iterations;
};

}  // namespace necklace

#pragma once

#include <stdexcept>
#include <string>

namespace limitless {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero final : Error {
    using Error::Error;
};

// Interval endpoints out of order (lo > hi), or a degenerate integration range.
struct InvalidInterval final : Error {
    using Error::Error;
};

// Monotonicity certification requires a strictly positive slope floor C.
struct InvalidC final : Error {
    using Error::Error;
};

// The interval enclosure of p' dipped below C on some sub-box. Reported as
// "not certified", never as "false": enclosures overestimate.
struct DerivativeLowerBoundNotCertified final : Error {
    using Error::Error;
};

struct NegativeArgument final : Error {
    using Error::Error;
};

struct NegativeSample final : Error {
    using Error::Error;
};

// Piecewise-linear modulus vertices violating the concavity-through-origin
// contract (first vertex not (0,0), h not increasing, or slopes increasing).
struct InvalidModulus final : Error {
    using Error::Error;
};

struct EvaluationFailure final : Error {
    using Error::Error;
};

struct MissingDerivative final : Error {
    using Error::Error;
};

struct MissingGradient final : Error {
    using Error::Error;
};

struct InvalidRectangle final : Error {
    using Error::Error;
};

struct NegativeL final : Error {
    using Error::Error;
};

struct CsvError final : Error {
    using Error::Error;
};

// The polynomial lowering path was requested for an expression containing
// built-in functions, negative exponents, or a foreign variable.
struct NonPolynomial final : Error {
    using Error::Error;
};

struct SyntaxError final : Error {
    std::size_t position;

    SyntaxError(std::size_t pos, const std::string& message)
        : Error("syntax error at position " + std::to_string(pos) + ": " + message),
          position(pos) {}
};

} // namespace limitless

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "limitless/polynomial.hpp"

namespace limitless {

// A black-box real function evaluated in binary64, with an optional
// derivative handle. Handles must be deterministic pure maps.
class NumericFunction {
public:
    using Fn = std::function<double(double)>;

    NumericFunction(std::string label, Fn f, std::optional<Fn> df = std::nullopt)
        : label_(std::move(label)), f_(std::move(f)), df_(std::move(df)) {}

    // Exact-backed: the input double becomes an exact rational, the
    // polynomial and its derivative are evaluated exactly, and the result
    // rounds once on the way out.
    static NumericFunction from_polynomial(const Polynomial& p, std::string label = "polynomial");

    // x^gamma on x >= 0; negative inputs raise EvaluationFailure instead of
    // producing a silent NaN.
    static NumericFunction power(double gamma);
    static NumericFunction sqrt_fn();
    static NumericFunction abs_fn();
    static NumericFunction exp_fn();
    static NumericFunction sin_fn();
    static NumericFunction cos_fn();

    double operator()(double x) const { return f_(x); }

    bool has_derivative() const { return df_.has_value(); }

    // Throws MissingDerivative when no handle was supplied.
    double derivative(double x) const;

    const std::string& label() const { return label_; }

private:
    std::string label_;
    Fn f_;
    std::optional<Fn> df_;
};

} // namespace limitless

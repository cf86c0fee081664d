#include "limitless/numeric_function.hpp"

#include <cmath>

namespace limitless {

double NumericFunction::derivative(double x) const {
    if (!df_) throw MissingDerivative("function '" + label_ + "' has no derivative handle");
    return (*df_)(x);
}

NumericFunction NumericFunction::from_polynomial(const Polynomial& p, std::string label) {
    Polynomial dp = limitless::derivative(p);
    return NumericFunction(
        std::move(label),
        [p](double x) { return p.eval(Rational::from_double(x)).to_double(); },
        [dp](double x) { return dp.eval(Rational::from_double(x)).to_double(); });
}

namespace {

double require_nonnegative(double x, const char* what) {
    if (x < 0) throw EvaluationFailure(std::string(what) + " undefined for x < 0");
    return x;
}

} // namespace

NumericFunction NumericFunction::power(double gamma) {
    return NumericFunction(
        "pow(x," + std::to_string(gamma) + ")",
        [gamma](double x) { return std::pow(require_nonnegative(x, "x^gamma"), gamma); },
        [gamma](double x) { return gamma * std::pow(require_nonnegative(x, "x^gamma"), gamma - 1.0); });
}

NumericFunction NumericFunction::sqrt_fn() {
    return NumericFunction(
        "sqrt(x)", [](double x) { return std::sqrt(require_nonnegative(x, "sqrt")); },
        [](double x) { return 1.0 / (2.0 * std::sqrt(require_nonnegative(x, "sqrt"))); });
}

NumericFunction NumericFunction::abs_fn() {
    return NumericFunction(
        "abs(x)", [](double x) { return std::fabs(x); },
        [](double x) { return x > 0 ? 1.0 : x < 0 ? -1.0 : 0.0; });
}

NumericFunction NumericFunction::exp_fn() {
    return NumericFunction(
        "exp(x)", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); });
}

NumericFunction NumericFunction::sin_fn() {
    return NumericFunction(
        "sin(x)", [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); });
}

NumericFunction NumericFunction::cos_fn() {
    return NumericFunction(
        "cos(x)", [](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); });
}

} // namespace limitless

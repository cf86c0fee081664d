#pragma once

#include "limitless/numeric_function.hpp"
#include "limitless/polynomial.hpp"

namespace limitless {

// P with derivative(P) = p and P(0) = 0, term-wise p_i x^{i+1} / (i + 1).
Polynomial antiderivative(const Polynomial& p);

// Exact P(b) - P(a).
Rational integrate_poly(const Polynomial& p, const Rational& a, const Rational& b);

// 1^k + 2^k + ... + n^k, exact.
Integer power_sum(long n, long k);

// (1/n) * sum (i/n)^k: the right-endpoint Riemann approximation of the area
// under x^k on [0, 1]; within k/n of 1/(k+1).
double riemann_power_curve(long n, long k);

// A guaranteed bracket of the integral of a Lipschitz function, built from
// the midpoint sum: on each panel f stays within L*h/2 of its midpoint
// value, and outward slack 2^-38 (|S| + 1) absorbs summation rounding.
struct IntegralEnclosure {
    double lower = 0.0;
    double upper = 0.0;
    long n_panels = 0;
    double lipschitz_l = 0.0;
    double midpoint_sum = 0.0;
};

IntegralEnclosure riemann_enclosure(const NumericFunction& f, double lips_l, double a, double b,
                                    long n);

} // namespace limitless

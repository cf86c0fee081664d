#pragma once

#include <limits>
#include <string>
#include <vector>

#include "limitless/modulus.hpp"
#include "limitless/numeric_function.hpp"

namespace limitless {

// Outcome of a grid verification sweep. For a fixed grid spec the report is
// bit-identical across runs.
struct VerificationReport {
    std::string inequality;
    std::vector<double> domain_lo; // one entry per axis
    std::vector<double> domain_hi;
    int grid_n = 0; // points per axis
    // Smallest constant making the inequality hold on the grid (excluding
    // near-diagonal pairs, see below).
    double empirical_constant = 0.0;
    std::vector<double> worst_pair; // grid configuration achieving it
    // Violation count against checked_bound; 0 when no bound was supplied.
    long violations = 0;
    double checked_bound = std::numeric_limits<double>::quiet_NaN();
    int directions = 0; // multivar increment sampling, 0 when unused
    int magnitudes = 0;
};

// (f(x) - f(a)) / (x - a) for x != a; f'(x) on the diagonal.
double difference_quotient(const NumericFunction& f, double x, double a);

// Empirical K over grid pairs for |f(x) - f(a) - f'(a)(x - a)| <= K (x - a)^2.
// Pairs closer than 2^-20 * width are excluded from constant extraction so
// rounding noise on the diagonal cannot masquerade as a constant.
VerificationReport verify_uld(const NumericFunction& f, double lo, double hi, int grid_n);

// Empirical K for |f(x) - f(a) - f'(a)(x - a)| <= K |x - a| m(|x - a|).
VerificationReport verify_m_differentiable(const NumericFunction& f, const Modulus& m, double lo,
                                           double hi, int grid_n);

// Checks |f'(x) - f'(a)| <= 2 K m(|x - a|) over all grid pairs; reports
// violations and the empirical best constant.
VerificationReport derivative_lipschitz_check(const NumericFunction& f, double k, const Modulus& m,
                                              double lo, double hi, int grid_n);

// Checks |Q_f(x, a) - Q_f(y, a)| <= 2 K m(|x - y|) over the 3-D grid,
// including diagonal quotients via the derivative handle. The per-axis grid
// is capped (default 64) to bound the triple sweep.
VerificationReport verify_quotient_continuity(const NumericFunction& f, double k, const Modulus& m,
                                              double lo, double hi, int grid_n, int grid_cap = 64);

} // namespace limitless

#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "limitless/uldcheck.hpp"

namespace limitless {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// A scalar function of two variables with optional gradient and mixed
// second-partial handles. When the gradient is absent, first partials fall
// back to central differences with step 2^-20.
class VectorFunction2 {
public:
    using Fn = std::function<double(double, double)>;
    using GradFn = std::function<Vec2(double, double)>;

    explicit VectorFunction2(Fn f, std::optional<GradFn> grad = std::nullopt,
                             std::optional<Fn> fxy = std::nullopt,
                             std::optional<Fn> fyx = std::nullopt)
        : f_(std::move(f)), grad_(std::move(grad)), fxy_(std::move(fxy)), fyx_(std::move(fyx)) {}

    double operator()(double x, double y) const { return f_(x, y); }

    bool has_gradient() const { return grad_.has_value(); }
    Vec2 gradient(double x, double y) const;

    // First partials: exact handle if present, otherwise central difference.
    double fx(double x, double y) const;
    double fy(double x, double y) const;

    bool has_mixed_partials() const { return fxy_.has_value() && fyx_.has_value(); }
    double fxy(double x, double y) const;
    double fyx(double x, double y) const;

private:
    Fn f_;
    std::optional<GradFn> grad_;
    std::optional<Fn> fxy_, fyx_;
};

// Axis-aligned rectangle [a, b] x [c, d].
struct Rect {
    double a, b, c, d;
};

// Empirical K over grid base points and sampled increments for
// |F(x + h) - F(x) - F'(x) h| <= K |h| m(|h|), Euclidean norms. Increments
// combine dir_count uniformly spread directions with mag_count magnitudes
// halving down from half the shorter box side.
VerificationReport verify_multivar_differentiable(const VectorFunction2& f, const Modulus& m,
                                                  const Rect& box, int grid_n, int dir_count,
                                                  int mag_count = 8);

// Checks |grad F(u) - grad F(v)| <= 6 K m(|u - v|) over unordered grid
// pairs; for scalar F the operator norm of the derivative difference is the
// Euclidean norm of the gradient difference.
VerificationReport verify_gradient_continuity(const VectorFunction2& f, double k, const Modulus& m,
                                              const Rect& box, int grid_n);

// Loop residual of the two edge paths around the rectangle:
//   [int_a^b fx(x,c) dx + int_c^d fy(b,y) dy]
// - [int_c^d fy(a,y) dy + int_a^b fx(x,d) dx],
// composite midpoint quadrature with n_quad panels per edge.
double greens_loop_residual(const VectorFunction2& f, const Rect& rect, int n_quad);

struct MixedPartialsReport {
    double integral = 0.0; // tensor-midpoint integral of fxy - fyx
    double tolerance = 0.0;
    bool within_tolerance = false;
    double loop_residual = 0.0;  // greens_loop_residual at 2 * n_quad
    double loop_tolerance = 0.0; // quadrature error estimate from the n vs 2n runs
    bool agrees_with_loop = false;
};

// Integrates fxy - fyx over the rectangle and cross-checks against the loop
// residual; the loop tolerance comes from the observed second-order
// shrinkage between n_quad and 2 * n_quad panels.
MixedPartialsReport mixed_partials_check(const VectorFunction2& f, const Rect& rect, int n_quad,
                                         double tol = std::ldexp(1.0, -30));

} // namespace limitless

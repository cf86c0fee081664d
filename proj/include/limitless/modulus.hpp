#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "limitless/numeric_function.hpp"

namespace limitless {

// A modulus of continuity: m(0) = 0, non-decreasing, subadditive. For the
// piecewise-linear kind, concavity through the origin (non-increasing
// segment slopes) is the enforced surrogate for subadditivity.
class Modulus {
public:
    enum class Kind { lipschitz, hoelder, piecewise_linear_concave };

    using Vertex = std::pair<double, double>; // (h, m(h))

    // m(t) = c * t
    static Modulus lipschitz(double c);
    // m(t) = c * t^gamma with 0 < gamma <= 1
    static Modulus hoelder(double c, double gamma);
    // Validated: first vertex (0,0), h strictly increasing, slopes
    // non-increasing and non-negative.
    static Modulus piecewise_linear_concave(std::vector<Vertex> vertices);
    // Constructor bypass for tests and raw data; invariants are the
    // caller's problem.
    static Modulus piecewise_unchecked(std::vector<Vertex> vertices);

    Kind kind() const { return kind_; }
    double c() const { return c_; }
    double gamma() const { return gamma_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    // m(t); beyond the last vertex the final segment's slope extrapolates.
    // Throws NegativeArgument for t < 0.
    double operator()(double t) const;

private:
    Modulus() = default;

    Kind kind_ = Kind::lipschitz;
    double c_ = 1.0;
    double gamma_ = 1.0;
    std::vector<Vertex> vertices_;
};

struct SubadditivityReport {
    bool passed = true;
    double worst_s = 0.0;
    double worst_t = 0.0;
    double worst_margin = 0.0; // m(s+t) - m(s) - m(t), positive means violated
};

// Checks m(s + t) <= m(s) + m(t) + 2^-40 over all grid pairs in [0, t_max].
SubadditivityReport check_subadditive(const Modulus& m, int grid_n, double t_max);

// Empirical oscillation data: g(h) bounds |f(x) - f(a)| over pairs with
// |x - a| <= h.
struct SampleSet {
    std::vector<std::pair<double, double>> points; // (h, g)
};

// The upper edge of the convex hull of the sampled oscillation data:
// (0,0) is prepended, g is monotonized by running maximum, and a monotone
// chain keeps only vertices with decreasing slopes. The result dominates
// every sample.
Modulus concave_majorant(const SampleSet& samples);

// Samples g(h) = max{ |f(x) - f(a)| : grid pairs with |x - a| <= h } on a
// uniform grid of grid_n points, at h_count separations spread over the
// grid's multiples of its spacing.
SampleSet empirical_oscillation(const NumericFunction& f, double lo, double hi, int grid_n,
                                int h_count);

// Two-column CSV "h,g" with a mandatory header row.
SampleSet read_sample_csv(std::istream& in);

} // namespace limitless

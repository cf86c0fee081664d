#include "limitless/uldcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace limitless {

double difference_quotient(const NumericFunction& f, double x, double a) {
    if (x == a) return f.derivative(x);
    return (f(x) - f(a)) / (x - a);
}

namespace {

struct GridCache {
    std::vector<double> xs, fs, dfs;
    double slack = 0.0;   // additive rounding allowance: 2^-38 * max(1, |f|)
    double min_sep = 0.0; // pairs closer than this are excluded from constants
};

GridCache sample_grid(const NumericFunction& f, double lo, double hi, int grid_n,
                      bool need_derivative) {
    if (!(lo < hi)) throw InvalidInterval("verification domain must have positive width");
    if (need_derivative && !f.has_derivative())
        throw MissingDerivative("function '" + f.label() + "' has no derivative handle");
    GridCache g;
    g.xs.resize(static_cast<std::size_t>(grid_n));
    g.fs.resize(static_cast<std::size_t>(grid_n));
    if (need_derivative) g.dfs.resize(static_cast<std::size_t>(grid_n));
    double fmax = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        g.xs[i] = lo + (hi - lo) * i / (grid_n - 1);
        g.fs[i] = f(g.xs[i]);
        fmax = std::max(fmax, std::fabs(g.fs[i]));
        if (need_derivative) g.dfs[i] = f.derivative(g.xs[i]);
    }
    g.slack = std::ldexp(std::max(1.0, fmax), -38);
    g.min_sep = std::ldexp(hi - lo, -20);
    return g;
}

VerificationReport make_report(std::string inequality, double lo, double hi, int grid_n) {
    VerificationReport rep;
    rep.inequality = std::move(inequality);
    rep.domain_lo = {lo};
    rep.domain_hi = {hi};
    rep.grid_n = grid_n;
    return rep;
}

// Shared residual sweep for the uld and m-differentiability inequalities;
// the weight maps |x - a| to the bound denominator.
template <typename Weight>
VerificationReport residual_sweep(const NumericFunction& f, double lo, double hi, int grid_n,
                                  std::string inequality, Weight&& weight) {
    if (grid_n < 3) throw std::invalid_argument("grid needs at least 3 points");
    GridCache g = sample_grid(f, lo, hi, grid_n, true);
    VerificationReport rep = make_report(std::move(inequality), lo, hi, grid_n);
    for (int ia = 0; ia < grid_n; ++ia) {
        for (int ix = 0; ix < grid_n; ++ix) {
            if (ix == ia) continue;
            double d = std::fabs(g.xs[ix] - g.xs[ia]);
            if (d < g.min_sep) continue;
            double denom = weight(d);
            if (!(denom > 0)) continue;
            double resid = std::fabs(g.fs[ix] - g.fs[ia] - g.dfs[ia] * (g.xs[ix] - g.xs[ia]));
            double ratio = resid / denom;
            if (ratio > rep.empirical_constant) {
                rep.empirical_constant = ratio;
                rep.worst_pair = {g.xs[ix], g.xs[ia]};
            }
        }
    }
    return rep;
}

} // namespace

VerificationReport verify_uld(const NumericFunction& f, double lo, double hi, int grid_n) {
    return residual_sweep(f, lo, hi, grid_n, "uld", [](double d) { return d * d; });
}

VerificationReport verify_m_differentiable(const NumericFunction& f, const Modulus& m, double lo,
                                           double hi, int grid_n) {
    return residual_sweep(f, lo, hi, grid_n, "m_differentiable",
                          [&m](double d) { return d * m(d); });
}

VerificationReport derivative_lipschitz_check(const NumericFunction& f, double k, const Modulus& m,
                                              double lo, double hi, int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("grid needs at least 2 points");
    GridCache g = sample_grid(f, lo, hi, grid_n, true);
    VerificationReport rep = make_report("derivative_lipschitz", lo, hi, grid_n);
    rep.checked_bound = k;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = i + 1; j < grid_n; ++j) {
            double d = g.xs[j] - g.xs[i];
            double diff = std::fabs(g.dfs[j] - g.dfs[i]);
            double md = m(d);
            if (diff > 2.0 * k * md + g.slack) ++rep.violations;
            if (md > 0) {
                double ratio = diff / (2.0 * md);
                if (ratio > rep.empirical_constant) {
                    rep.empirical_constant = ratio;
                    rep.worst_pair = {g.xs[j], g.xs[i]};
                }
            }
        }
    }
    return rep;
}

VerificationReport verify_quotient_continuity(const NumericFunction& f, double k, const Modulus& m,
                                              double lo, double hi, int grid_n, int grid_cap) {
    if (grid_n < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (grid_cap >= 2 && grid_n > grid_cap) grid_n = grid_cap;
    GridCache g = sample_grid(f, lo, hi, grid_n, true);

    // Q[i][j] = difference quotient at (x_i, x_j); the diagonal is f'.
    std::vector<std::vector<double>> q(static_cast<std::size_t>(grid_n),
                                       std::vector<double>(static_cast<std::size_t>(grid_n)));
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j)
            q[i][j] = i == j ? g.dfs[i] : (g.fs[i] - g.fs[j]) / (g.xs[i] - g.xs[j]);

    VerificationReport rep = make_report("quotient_continuity", lo, hi, grid_n);
    rep.checked_bound = k;
    for (int ix = 0; ix < grid_n; ++ix) {
        for (int iy = ix + 1; iy < grid_n; ++iy) {
            double md = m(std::fabs(g.xs[ix] - g.xs[iy]));
            double bound = 2.0 * k * md + g.slack;
            for (int ia = 0; ia < grid_n; ++ia) {
                double diff = std::fabs(q[ix][ia] - q[iy][ia]);
                if (diff > bound) ++rep.violations;
                if (md > 0) {
                    double ratio = diff / (2.0 * md);
                    if (ratio > rep.empirical_constant) {
                        rep.empirical_constant = ratio;
                        rep.worst_pair = {g.xs[ix], g.xs[iy], g.xs[ia]};
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace limitless

#include "limitless/multivar.hpp"

#include <stdexcept>
#include <vector>

namespace limitless {

namespace {

constexpr double kDiffStep = 0x1p-20;

void require_rect(const Rect& r) {
    if (!(r.a < r.b) || !(r.c < r.d))
        throw InvalidRectangle("rectangle needs a < b and c < d");
}

// Composite midpoint rule on [lo, hi].
template <typename G>
double midpoint_integral(G&& g, double lo, double hi, int n) {
    double h = (hi - lo) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += g(lo + (i + 0.5) * h);
    return sum * h;
}

} // namespace

Vec2 VectorFunction2::gradient(double x, double y) const {
    if (!grad_) throw MissingGradient("no gradient handle");
    return (*grad_)(x, y);
}

double VectorFunction2::fx(double x, double y) const {
    if (grad_) return (*grad_)(x, y).x;
    return (f_(x + kDiffStep, y) - f_(x - kDiffStep, y)) / (2.0 * kDiffStep);
}

double VectorFunction2::fy(double x, double y) const {
    if (grad_) return (*grad_)(x, y).y;
    return (f_(x, y + kDiffStep) - f_(x, y - kDiffStep)) / (2.0 * kDiffStep);
}

double VectorFunction2::fxy(double x, double y) const {
    if (!fxy_) throw MissingGradient("no f_xy handle");
    return (*fxy_)(x, y);
}

double VectorFunction2::fyx(double x, double y) const {
    if (!fyx_) throw MissingGradient("no f_yx handle");
    return (*fyx_)(x, y);
}

VerificationReport verify_multivar_differentiable(const VectorFunction2& f, const Modulus& m,
                                                  const Rect& box, int grid_n, int dir_count,
                                                  int mag_count) {
    require_rect(box);
    if (grid_n < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
    if (dir_count < 1 || mag_count < 1)
        throw std::invalid_argument("need at least one direction and one magnitude");
    if (!f.has_gradient()) throw MissingGradient("differentiability check needs the gradient");

    std::vector<Vec2> increments;
    increments.reserve(static_cast<std::size_t>(dir_count) * mag_count);
    double mag = std::min(box.b - box.a, box.d - box.c) / 2.0;
    for (int j = 0; j < mag_count; ++j, mag /= 2.0) {
        for (int k = 0; k < dir_count; ++k) {
            double theta = 2.0 * M_PI * k / dir_count;
            increments.push_back({mag * std::cos(theta), mag * std::sin(theta)});
        }
    }

    VerificationReport rep;
    rep.inequality = "multivar_differentiable";
    rep.domain_lo = {box.a, box.c};
    rep.domain_hi = {box.b, box.d};
    rep.grid_n = grid_n;
    rep.directions = dir_count;
    rep.magnitudes = mag_count;

    for (int i = 0; i < grid_n; ++i) {
        double x = box.a + (box.b - box.a) * i / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            double y = box.c + (box.d - box.c) * j / (grid_n - 1);
            Vec2 g = f.gradient(x, y);
            double base = f(x, y);
            for (const Vec2& h : increments) {
                double norm = std::hypot(h.x, h.y);
                double denom = norm * m(norm);
                if (!(denom > 0)) continue;
                double resid = std::fabs(f(x + h.x, y + h.y) - base - g.x * h.x - g.y * h.y);
                double ratio = resid / denom;
                if (ratio > rep.empirical_constant) {
                    rep.empirical_constant = ratio;
                    rep.worst_pair = {x, y, h.x, h.y};
                }
            }
        }
    }
    return rep;
}

VerificationReport verify_gradient_continuity(const VectorFunction2& f, double k, const Modulus& m,
                                              const Rect& box, int grid_n) {
    require_rect(box);
    if (grid_n < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
    if (!f.has_gradient()) throw MissingGradient("gradient continuity check needs the gradient");

    std::vector<double> px, py;
    std::vector<Vec2> grads;
    double gmax = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        double x = box.a + (box.b - box.a) * i / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            double y = box.c + (box.d - box.c) * j / (grid_n - 1);
            px.push_back(x);
            py.push_back(y);
            grads.push_back(f.gradient(x, y));
            gmax = std::max(gmax, std::max(std::fabs(grads.back().x), std::fabs(grads.back().y)));
        }
    }
    const double slack = std::ldexp(std::max(1.0, gmax), -38);

    VerificationReport rep;
    rep.inequality = "gradient_continuity";
    rep.domain_lo = {box.a, box.c};
    rep.domain_hi = {box.b, box.d};
    rep.grid_n = grid_n;
    rep.checked_bound = k;

    const std::size_t n = px.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dist = std::hypot(px[i] - px[j], py[i] - py[j]);
            double diff = std::hypot(grads[i].x - grads[j].x, grads[i].y - grads[j].y);
            double md = m(dist);
            if (diff > 6.0 * k * md + slack) ++rep.violations;
            if (md > 0) {
                double ratio = diff / (6.0 * md);
                if (ratio > rep.empirical_constant) {
                    rep.empirical_constant = ratio;
                    rep.worst_pair = {px[i], py[i], px[j], py[j]};
                }
            }
        }
    }
    return rep;
}

double greens_loop_residual(const VectorFunction2& f, const Rect& rect, int n_quad) {
    require_rect(rect);
    if (n_quad < 1) throw std::invalid_argument("need at least one quadrature panel");
    double bottom = midpoint_integral([&](double x) { return f.fx(x, rect.c); }, rect.a, rect.b, n_quad);
    double right = midpoint_integral([&](double y) { return f.fy(rect.b, y); }, rect.c, rect.d, n_quad);
    double left = midpoint_integral([&](double y) { return f.fy(rect.a, y); }, rect.c, rect.d, n_quad);
    double top = midpoint_integral([&](double x) { return f.fx(x, rect.d); }, rect.a, rect.b, n_quad);
    return (bottom + right) - (left + top);
}

MixedPartialsReport mixed_partials_check(const VectorFunction2& f, const Rect& rect, int n_quad,
                                         double tol) {
    require_rect(rect);
    if (n_quad < 1) throw std::invalid_argument("need at least one quadrature panel");
    if (!f.has_mixed_partials()) throw MissingGradient("mixed-partials check needs f_xy and f_yx");

    double hx = (rect.b - rect.a) / n_quad;
    double hy = (rect.d - rect.c) / n_quad;
    double sum = 0.0;
    for (int i = 0; i < n_quad; ++i) {
        double x = rect.a + (i + 0.5) * hx;
        for (int j = 0; j < n_quad; ++j) {
            double y = rect.c + (j + 0.5) * hy;
            sum += f.fxy(x, y) - f.fyx(x, y);
        }
    }

    MixedPartialsReport rep;
    rep.integral = sum * hx * hy;
    rep.tolerance = tol;
    rep.within_tolerance = std::fabs(rep.integral) <= tol;

    // Midpoint is second order: the n vs 2n difference over-estimates the
    // remaining error of the finer run by about a factor 3.
    double coarse = greens_loop_residual(f, rect, n_quad);
    rep.loop_residual = greens_loop_residual(f, rect, 2 * n_quad);
    rep.loop_tolerance = (4.0 / 3.0) * std::fabs(coarse - rep.loop_residual) + std::ldexp(1.0, -30);
    rep.agrees_with_loop = std::fabs(rep.integral - rep.loop_residual) <= tol + rep.loop_tolerance;
    return rep;
}

} // namespace limitless

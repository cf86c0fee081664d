#include "limitless/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace limitless {

Polynomial antiderivative(const Polynomial& p) {
    if (p.is_zero()) return {};
    std::vector<Rational> out(p.coeffs().size() + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out[i + 1] = p.coeffs()[i] / Rational(static_cast<long>(i) + 1);
    return Polynomial(std::move(out));
}

Rational integrate_poly(const Polynomial& p, const Rational& a, const Rational& b) {
    Polynomial big_p = antiderivative(p);
    return big_p.eval(b) - big_p.eval(a);
}

Integer power_sum(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("power_sum needs n >= 0 and k >= 0");
    Integer acc = 0;
    Integer term;
    for (long i = 1; i <= n; ++i) {
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(i),
                      static_cast<unsigned long>(k));
        acc += term;
    }
    return acc;
}

double riemann_power_curve(long n, long k) {
    if (n < 1 || k < 0) throw std::invalid_argument("riemann_power_curve needs n >= 1 and k >= 0");
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(k) + 1);
    return Rational(power_sum(n, k), denom).to_double();
}

IntegralEnclosure riemann_enclosure(const NumericFunction& f, double lips_l, double a, double b,
                                    long n) {
    if (!(a < b)) throw InvalidInterval("integration range must satisfy a < b");
    if (!(lips_l >= 0)) throw NegativeL("Lipschitz constant must be >= 0");
    if (n < 1) throw std::invalid_argument("need at least one panel");

    const double h = (b - a) / static_cast<double>(n);
    double sum = 0.0;
    for (long i = 0; i < n; ++i) sum += f(a + (static_cast<double>(i) + 0.5) * h);
    const double s = sum * h;

    const double half_width = lips_l * (b - a) * h / 2.0;
    const double slack = std::ldexp(std::fabs(s) + 1.0, -38);

    IntegralEnclosure out;
    out.midpoint_sum = s;
    out.n_panels = n;
    out.lipschitz_l = lips_l;
    out.lower = s - half_width - slack;
    out.upper = s + half_width + slack;
    return out;
}

} // namespace limitless

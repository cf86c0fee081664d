#include "limitless/interval.hpp"

#include <stdexcept>

namespace limitless {

Interval Interval::subinterval(long i, long n) const {
    if (n <= 0 || i < 0 || i >= n) throw std::invalid_argument("subinterval index out of range");
    Rational w = width();
    Rational nn(n);
    return Interval(lo_ + w * Rational(i) / nn, lo_ + w * Rational(i + 1) / nn);
}

Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo_ * b.lo_;
    Rational p2 = a.lo_ * b.hi_;
    Rational p3 = a.hi_ * b.lo_;
    Rational p4 = a.hi_ * b.hi_;
    return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Interval operator*(const Rational& c, const Interval& b) {
    if (c.sign() >= 0) return Interval(c * b.lo_, c * b.hi_);
    return Interval(c * b.hi_, c * b.lo_);
}

Interval pow(const Interval& base, int k) {
    if (k < 0) throw std::invalid_argument("interval pow requires k >= 0");
    if (k == 0) return Interval::point(Rational(1));
    auto uk = static_cast<unsigned long>(k);
    Rational plo = pow(base.lo(), uk);
    Rational phi = pow(base.hi(), uk);
    if (k % 2 == 1) return Interval(plo, phi);
    if (base.lo().sign() >= 0) return Interval(plo, phi);
    if (base.hi().sign() <= 0) return Interval(phi, plo);
    return Interval(Rational(0), pow(base.mag(), uk));
}

Interval interval_eval(const Polynomial& p, const Interval& x) {
    Interval acc = Interval::point(Rational(0));
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        acc = acc + c * pow(x, i);
    }
    return acc;
}

Interval interval_eval(const BivariatePolynomial& b, const Interval& x, const Interval& a) {
    Interval acc = Interval::point(Rational(0));
    for (int i = 0; i <= b.x_degree(); ++i) {
        Interval xi = pow(x, i);
        const Polynomial& row = b.row(i);
        for (int j = 0; j <= row.degree(); ++j) {
            const Rational& c = row.coeff(j);
            if (c.is_zero()) continue;
            acc = acc + (c * xi) * pow(a, j);
        }
    }
    return acc;
}

} // namespace limitless

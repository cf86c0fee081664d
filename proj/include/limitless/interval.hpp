#pragma once

#include "limitless/polynomial.hpp"
#include "limitless/rational.hpp"

namespace limitless {

// Closed interval with exact rational endpoints. All arithmetic is
// inclusion-sound: the exact range of the operation is contained in the
// computed interval.
class Interval {
public:
    Interval() = default;

    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) throw InvalidInterval("interval endpoints out of order");
    }

    static Interval point(const Rational& v) { return Interval(v, v); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

    // max(|lo|, |hi|): a bound on |v| for every v in the interval.
    Rational mag() const { return max(lo_.abs(), hi_.abs()); }

    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    // The i-th of n equal parts, exact.
    Interval subinterval(long i, long n) const;

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator*(const Rational& c, const Interval& b);

    friend bool operator==(const Interval& a, const Interval& b) = default;

private:
    Rational lo_, hi_;
};

// Tightened power: even exponents over a straddling interval yield
// [0, mag^k] rather than the naive product bound.
Interval pow(const Interval& base, int k);

// Enclosure of the range of p over the box; every monomial is enclosed with
// the tightened power rule and the results summed.
Interval interval_eval(const Polynomial& p, const Interval& x);
Interval interval_eval(const BivariatePolynomial& b, const Interval& x, const Interval& a);

} // namespace limitless

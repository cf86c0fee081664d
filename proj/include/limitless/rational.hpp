#pragma once

#include <gmpxx.h>

#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "limitless/errors.hpp"

namespace limitless {

using Integer = mpz_class;

// Exact arbitrary-precision rational scalar. Always canonical: gcd-reduced
// with a positive denominator. Arithmetic never rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(const Integer& n) : q_(n) {}

    Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}

    Rational(const Integer& n, const Integer& d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Exact conversion: every finite binary64 value is a dyadic rational.
    static Rational from_double(double x) {
        if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
        Rational r;
        r.q_ = mpq_class(x);
        return r;
    }

    // Accepts "3", "-3", "3/4", "1.25", ".5", "2.5e-3".
    static Rational from_string(std::string_view s);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    // "5" or "-3/2"; omits a unit denominator.
    std::string str() const { return q_.get_str(); }

    // Always "num/den", e.g. "5/1"; the form used in JSON payloads.
    std::string frac_str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// base^k with k >= 0, exact.
Rational pow(const Rational& base, unsigned long k);

// Smallest integer >= n/d for positive d.
Integer ceil_div(const Integer& n, const Integer& d);

} // namespace limitless

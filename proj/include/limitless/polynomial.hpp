#pragma once

#include <initializer_list>
#include <vector>

#include "limitless/rational.hpp"

namespace limitless {

// Dense univariate polynomial over the exact rationals. coeff(i) multiplies
// x^i. The zero polynomial stores no coefficients and has degree() == -1
// (internal convention); otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs_low_to_high);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }
    // c * x^k
    static Polynomial monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Zero beyond the stored degree.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Exact Horner evaluation.
    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Dense polynomial in the two variables x and a, stored as polynomials in a
// stacked by x-power: coeff(i, j) multiplies x^i a^j.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const Rational& c);
    // p(x) viewed as a bivariate polynomial.
    static BivariatePolynomial in_x(const Polynomial& p);
    // p(a) viewed as a bivariate polynomial.
    static BivariatePolynomial in_a(const Polynomial& p);

    bool is_zero() const { return rows_.empty(); }
    int x_degree() const { return static_cast<int>(rows_.size()) - 1; }
    int a_degree() const;

    Rational coeff(int i, int j) const;
    // Row i is the polynomial in a multiplying x^i.
    const Polynomial& row(int i) const;

    // Exact evaluation at rational (x, a).
    Rational eval(const Rational& x, const Rational& a) const;

    // Substitute a = x, collapsing to a univariate polynomial.
    Polynomial diagonal() const;

    BivariatePolynomial operator-() const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(const Rational& c, const BivariatePolynomial& b);

    BivariatePolynomial pow(int k) const;

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) = default;

private:
    explicit BivariatePolynomial(std::vector<Polynomial> rows) : rows_(std::move(rows)) { trim(); }
    void trim();

    std::vector<Polynomial> rows_;

    friend BivariatePolynomial divided_difference(const Polynomial& p);
    friend BivariatePolynomial tangent_remainder(const Polynomial& p);
};

// The exact quotient q with p(x) - p(a) = (x - a) q(x, a), obtained by one
// pass of synthetic division with symbolic a.
BivariatePolynomial divided_difference(const Polynomial& p);

// q(x, x): differentiation as division, no limits involved.
Polynomial derivative(const Polynomial& p);

// The factor r witnessing the double root at x = a:
// p(x) - p(a) - p'(a)(x - a) = (x - a)^2 r(x, a).
BivariatePolynomial tangent_remainder(const Polynomial& p);

// p(g(x)), exact.
Polynomial compose(const Polynomial& p, const Polynomial& g);

} // namespace limitless

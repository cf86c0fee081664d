#include "limitless/polynomial.hpp"

namespace limitless {

namespace {
const Rational kZero{};
const Polynomial kZeroPoly{};
} // namespace

Polynomial::Polynomial(std::initializer_list<Rational> coeffs_low_to_high)
    : coeffs_(coeffs_low_to_high) {
    trim();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
    if (c.is_zero()) return {};
    std::vector<Rational> cs(static_cast<std::size_t>(k) + 1);
    cs.back() = c;
    return Polynomial(std::move(cs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return {};
    Polynomial r(p);
    for (auto& v : r.coeffs_) v *= c;
    r.trim();
    return r;
}

Polynomial compose(const Polynomial& p, const Polynomial& g) {
    Polynomial acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * g + Polynomial::constant(*it);
    return acc;
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) {
    return BivariatePolynomial(std::vector<Polynomial>{Polynomial::constant(c)});
}

BivariatePolynomial BivariatePolynomial::in_x(const Polynomial& p) {
    std::vector<Polynomial> rows;
    rows.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) rows.push_back(Polynomial::constant(c));
    return BivariatePolynomial(std::move(rows));
}

BivariatePolynomial BivariatePolynomial::in_a(const Polynomial& p) {
    return BivariatePolynomial(std::vector<Polynomial>{p});
}

void BivariatePolynomial::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int BivariatePolynomial::a_degree() const {
    int d = -1;
    for (const auto& r : rows_) d = d < r.degree() ? r.degree() : d;
    return d;
}

Rational BivariatePolynomial::coeff(int i, int j) const { return row(i).coeff(j); }

const Polynomial& BivariatePolynomial::row(int i) const {
    if (i < 0 || i >= static_cast<int>(rows_.size())) return kZeroPoly;
    return rows_[static_cast<std::size_t>(i)];
}

Rational BivariatePolynomial::eval(const Rational& x, const Rational& a) const {
    Rational acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x + it->eval(a);
    return acc;
}

Polynomial BivariatePolynomial::diagonal() const {
    Polynomial out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        // x^i * row_i(x)
        std::vector<Rational> shifted(i + rows_[i].coeffs().size());
        for (std::size_t j = 0; j < rows_[i].coeffs().size(); ++j)
            shifted[i + j] = rows_[i].coeffs()[j];
        out += Polynomial(std::move(shifted));
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r(*this);
    for (auto& row : r.rows_) row = -row;
    return r;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
    trim();
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
    trim();
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Polynomial> out(a.rows_.size() + b.rows_.size() - 1);
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        for (std::size_t j = 0; j < b.rows_.size(); ++j)
            out[i + j] += a.rows_[i] * b.rows_[j];
    return BivariatePolynomial(std::move(out));
}

BivariatePolynomial operator*(const Rational& c, const BivariatePolynomial& b) {
    BivariatePolynomial r(b);
    for (auto& row : r.rows_) row = c * row;
    r.trim();
    return r;
}

BivariatePolynomial BivariatePolynomial::pow(int k) const {
    BivariatePolynomial acc = constant(Rational(1));
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

BivariatePolynomial divided_difference(const Polynomial& p) {
    // Synthetic division of p(x) - p(a) by (x - a), coefficients living in
    // Q[a]: q_k = p_{k+1} + a * q_{k+1}. The remainder p(a) cancels exactly.
    int n = p.degree();
    if (n < 1) return {};
    std::vector<Polynomial> q(static_cast<std::size_t>(n));
    Polynomial carry = Polynomial::constant(p.coeff(n));
    q[static_cast<std::size_t>(n - 1)] = carry;
    for (int k = n - 2; k >= 0; --k) {
        carry = Polynomial::variable() * carry + Polynomial::constant(p.coeff(k + 1));
        q[static_cast<std::size_t>(k)] = carry;
    }
    return BivariatePolynomial(std::move(q));
}

Polynomial derivative(const Polynomial& p) { return divided_difference(p).diagonal(); }

BivariatePolynomial tangent_remainder(const Polynomial& p) {
    // q(x, a) - p'(a) vanishes at x = a, so it divides by (x - a) once more.
    BivariatePolynomial s = divided_difference(p) - BivariatePolynomial::in_a(derivative(p));
    int n = s.x_degree();
    if (n < 1) return {};
    std::vector<Polynomial> r(static_cast<std::size_t>(n));
    Polynomial carry = s.row(n);
    r[static_cast<std::size_t>(n - 1)] = carry;
    for (int k = n - 2; k >= 0; --k) {
        carry = Polynomial::variable() * carry + s.row(k + 1);
        r[static_cast<std::size_t>(k)] = carry;
    }
    return BivariatePolynomial(std::move(r));
}

} // namespace limitless

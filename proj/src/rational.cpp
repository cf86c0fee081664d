#include "limitless/rational.hpp"

#include <cctype>
#include <ostream>

namespace limitless {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned long k) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(n, d);
}

Integer ceil_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Rational Rational::from_string(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw Error("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) throw Error("bare sign is not a rational literal");
    }

    auto apply_sign = [negative](Rational r) { return negative ? -r : r; };

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash);
        std::string_view ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds))
            throw Error("malformed fraction literal: " + std::string(s));
        Integer n(std::string(ns), 10);
        Integer d(std::string(ds), 10);
        return apply_sign(Rational(n, d));
    }

    // Decimal form with optional exponent: digits [. digits] [e[+-]digits]
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        s = s.substr(0, e);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es)) throw Error("malformed exponent in rational literal");
        exp10 = std::stol(std::string(es));
        if (eneg) exp10 = -exp10;
    }

    std::string digits;
    long frac_digits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw Error("malformed decimal literal");
        if (!ip.empty() && !all_digits(ip)) throw Error("malformed decimal literal");
        if (!fp.empty() && !all_digits(fp)) throw Error("malformed decimal literal");
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) throw Error("malformed integer literal: " + std::string(s));
        digits = std::string(s);
    }
    if (digits.empty()) throw Error("malformed rational literal");

    Integer n(digits, 10);
    long net = exp10 - frac_digits;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    Rational r = net < 0 ? Rational(n, scale) : Rational(n * scale, Integer(1));
    return apply_sign(r);
}

} // namespace limitless

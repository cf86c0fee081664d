#include <doctest.h>

#include <random>

#include "limitless/certify.hpp"
#include "limitless/json_io.hpp"
#include "limitless/quad.hpp"
#include "test_support.hpp"

using limitless::basic_estimate_constant;
using limitless::BivariatePolynomial;
using limitless::CertifiedBound;
using limitless::derivative_bound;
using limitless::Interval;
using limitless::monotonicity_certificate;
using limitless::MonotonicityCertificate;
using limitless::Polynomial;
using limitless::Rational;
using testsupport::random_polynomial;
using testsupport::random_rational_in;

namespace {

Polynomial x_power(int n) { return Polynomial::monomial(Rational(1), n); }

// Brute-force grid maximum of |b| over domain^2, exact.
Rational grid_sup_abs(const BivariatePolynomial& b, const Interval& dom, int n) {
    Rational best(0);
    for (int i = 0; i <= n; ++i) {
        Rational x = dom.lo() + dom.width() * Rational(i, n);
        for (int j = 0; j <= n; ++j) {
            Rational a = dom.lo() + dom.width() * Rational(j, n);
            best = limitless::max(best, b.eval(x, a).abs());
        }
    }
    return best;
}

Rational grid_sup_abs(const Polynomial& p, const Interval& dom, int n) {
    Rational best(0);
    for (int i = 0; i <= n; ++i) {
        Rational x = dom.lo() + dom.width() * Rational(i, n);
        best = limitless::max(best, p.eval(x).abs());
    }
    return best;
}

} // namespace

TEST_SUITE("certify") {

    TEST_CASE("basic estimate constant: x^2 gives K = 1 at any depth") {
        for (int depth : {0, 2, 5}) {
            CertifiedBound k = basic_estimate_constant(x_power(2), Interval(Rational(-7), Rational(9)), depth);
            CHECK(k.value == Rational(1));
        }
    }

    TEST_CASE("basic estimate constant: x^3 on [0,1]") {
        Interval dom(Rational(0), Rational(1));
        CertifiedBound k = basic_estimate_constant(x_power(3), dom, 3);
        CHECK(k.value >= Rational(3));
        CHECK(k.value <= Rational(7, 2));
        // oracle: |r| = |x + 2a| maxes out at 3 over a fine grid
        Rational sup = grid_sup_abs(tangent_remainder(x_power(3)), dom, 100);
        CHECK(sup == Rational(3));
        CHECK(sup <= k.value);
    }

    TEST_CASE("basic estimate constant: degree <= 1 gives K = 0") {
        Interval dom(Rational(-2), Rational(2));
        CHECK(basic_estimate_constant(Polynomial{Rational(5), Rational(-3)}, dom, 4).value == Rational(0));
        CHECK(basic_estimate_constant(Polynomial{}, dom, 4).value == Rational(0));
    }

    TEST_CASE("derivative bound examples") {
        CHECK(derivative_bound(Polynomial::variable(), Interval(Rational(-9), Rational(4)), 2).value ==
              Rational(1));

        CertifiedBound m2 = derivative_bound(x_power(2), Interval(Rational(0), Rational(1)), 3);
        CHECK(m2.value >= Rational(2));
        CHECK(m2.value <= Rational(9, 4));

        CertifiedBound m3 = derivative_bound(x_power(3), Interval(Rational(-1), Rational(1)), 3);
        CHECK(m3.value >= Rational(3));
        CHECK(m3.value <= Rational(17, 5));
    }

    TEST_CASE("bounds dominate a 200 x 200 brute-force grid") {
        std::mt19937 rng(5150);
        Interval dom(Rational(-2), Rational(2));
        for (int trial = 0; trial < 2; ++trial) {
            Polynomial p = random_polynomial(rng, 5, 20, 8);
            CertifiedBound k = basic_estimate_constant(p, dom, 4);
            CHECK(grid_sup_abs(tangent_remainder(p), dom, 200) <= k.value);
            CertifiedBound m = derivative_bound(p, dom, 4);
            CHECK(grid_sup_abs(derivative(p), dom, 200) <= m.value);
        }
    }

    TEST_CASE("deeper subdivision never loosens the bound") {
        std::mt19937 rng(31);
        Interval dom(Rational(-1), Rational(1));
        for (int trial = 0; trial < 4; ++trial) {
            Polynomial p = random_polynomial(rng, 5, 12, 6);
            Rational prev_k = basic_estimate_constant(p, dom, 0).value;
            Rational prev_m = derivative_bound(p, dom, 0).value;
            for (int depth = 1; depth <= 4; ++depth) {
                Rational k = basic_estimate_constant(p, dom, depth).value;
                Rational m = derivative_bound(p, dom, depth).value;
                CHECK(k <= prev_k);
                CHECK(m <= prev_m);
                prev_k = k;
                prev_m = m;
            }
        }
        // x^3 on [0,1]: depth 8 is within 2^-4 of the true sup 3
        Rational deep = basic_estimate_constant(x_power(3), Interval(Rational(0), Rational(1)), 8).value;
        CHECK(deep <= Rational(3) * (Rational(1) + Rational(1, 16)));
    }

    TEST_CASE("basic estimate inequality holds at random rational pairs") {
        std::mt19937 rng(62);
        Interval dom(Rational(-2), Rational(2));
        for (int trial = 0; trial < 4; ++trial) {
            Polynomial p = random_polynomial(rng, 6, 25, 10);
            Polynomial dp = derivative(p);
            Rational k = basic_estimate_constant(p, dom, 5).value;
            for (int i = 0; i < 500; ++i) {
                Rational x = random_rational_in(rng, dom.lo(), dom.hi());
                Rational a = random_rational_in(rng, dom.lo(), dom.hi());
                Rational resid = (p.eval(x) - p.eval(a) - dp.eval(a) * (x - a)).abs();
                CHECK(resid <= k * (x - a) * (x - a));
            }
        }
    }

    TEST_CASE("rule of bounded change holds at random rational pairs") {
        std::mt19937 rng(63);
        Interval dom(Rational(-2), Rational(2));
        for (int trial = 0; trial < 4; ++trial) {
            Polynomial p = random_polynomial(rng, 6, 25, 10);
            Rational m = derivative_bound(p, dom, 5).value;
            for (int i = 0; i < 500; ++i) {
                Rational x = random_rational_in(rng, dom.lo(), dom.hi());
                Rational a = random_rational_in(rng, dom.lo(), dom.hi());
                CHECK((p.eval(x) - p.eval(a)).abs() <= m * (x - a).abs());
            }
        }
    }

    TEST_CASE("monotonicity certificate: x^3 on [1,2] with C = 3") {
        Interval dom(Rational(1), Rational(2));
        MonotonicityCertificate cert = monotonicity_certificate(x_power(3), dom, Rational(3), 4);
        CHECK(cert.k.value <= Rational(13, 2));
        CHECK(cert.partition.size() <= 4); // at most 3 steps
        // steps no longer than C / K
        for (std::size_t i = 0; i + 1 < cert.partition.size(); ++i)
            CHECK((cert.partition[i + 1] - cert.partition[i]) * cert.k.value <= cert.c);
        CHECK(cert.values.front() == Rational(1));
        CHECK(cert.values.back() == Rational(8));
        CHECK_NOTHROW(validate(cert));
    }

    TEST_CASE("monotonicity certificate: linear polynomial is a single step") {
        MonotonicityCertificate cert = monotonicity_certificate(
            Polynomial::variable(), Interval(Rational(0), Rational(1)), Rational(1), 3);
        CHECK(cert.k.value == Rational(0));
        CHECK(cert.partition.size() == 2);
        CHECK_NOTHROW(validate(cert));
    }

    TEST_CASE("monotonicity certificate: x^2 on [-1,1] with C = 1 is refused") {
        CHECK_THROWS_AS(monotonicity_certificate(x_power(2), Interval(Rational(-1), Rational(1)),
                                                 Rational(1), 5),
                        limitless::DerivativeLowerBoundNotCertified);
    }

    TEST_CASE("monotonicity certificate rejects C <= 0") {
        CHECK_THROWS_AS(monotonicity_certificate(x_power(3), Interval(Rational(1), Rational(2)),
                                                 Rational(0), 3),
                        limitless::InvalidC);
        CHECK_THROWS_AS(monotonicity_certificate(x_power(3), Interval(Rational(1), Rational(2)),
                                                 Rational(-2), 3),
                        limitless::InvalidC);
    }

    TEST_CASE("random certificates validate") {
        std::mt19937 rng(64);
        for (int trial = 0; trial < 8; ++trial) {
            // integrate 2 + q^2 with small linear q: the derivative stays >= 2
            // with enough margin for the enclosures at depth 6
            Polynomial q = random_polynomial(rng, 1, 2, 4);
            Polynomial p = limitless::antiderivative(Polynomial{Rational(2)} + q * q);
            MonotonicityCertificate cert =
                monotonicity_certificate(p, Interval(Rational(0), Rational(1)), Rational(1), 6);
            CHECK_NOTHROW(validate(cert));
            CHECK(cert.values.front() <= cert.values.back());
        }
    }

    TEST_CASE("validator rejects doctored certificates") {
        Interval dom(Rational(1), Rational(2));
        MonotonicityCertificate cert = monotonicity_certificate(x_power(3), dom, Rational(3), 3);

        MonotonicityCertificate bad = cert;
        bad.values.back() = bad.values.back() + Rational(1);
        CHECK_THROWS_AS(validate(bad), limitless::Error);

        bad = cert;
        bad.partition.back() = Rational(3);
        CHECK_THROWS_AS(validate(bad), limitless::Error);

        bad = cert;
        bad.k.value = Rational(100); // makes the recorded steps too long
        CHECK_THROWS_AS(validate(bad), limitless::Error);
    }

    TEST_CASE("certificate JSON round trip") {
        Interval dom(Rational(1), Rational(2));
        MonotonicityCertificate cert = monotonicity_certificate(x_power(3), dom, Rational(3), 4);
        limitless::Json j = limitless::to_json(cert);
        MonotonicityCertificate back = limitless::certificate_from_json(j);
        CHECK(back.p == cert.p);
        CHECK(back.domain == cert.domain);
        CHECK(back.c == cert.c);
        CHECK(back.k.value == cert.k.value);
        CHECK(back.partition == cert.partition);
        CHECK(back.values == cert.values);
        CHECK_NOTHROW(validate(back));

        CertifiedBound kb = basic_estimate_constant(x_power(3), dom, 2);
        CertifiedBound kb2 = limitless::certified_bound_from_json(limitless::to_json(kb));
        CHECK(kb2.value == kb.value);
        CHECK(kb2.depth == kb.depth);
        CHECK(kb2.domain == kb.domain);
        CHECK((kb2.quantity == kb.quantity));
    }
}

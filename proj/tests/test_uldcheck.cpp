#include <doctest.h>

#include <cmath>

#include "limitless/certify.hpp"
#include "limitless/json_io.hpp"
#include "limitless/uldcheck.hpp"

using limitless::derivative_lipschitz_check;
using limitless::difference_quotient;
using limitless::Modulus;
using limitless::NumericFunction;
using limitless::Polynomial;
using limitless::Rational;
using limitless::VerificationReport;
using limitless::verify_m_differentiable;
using limitless::verify_quotient_continuity;
using limitless::verify_uld;

namespace {

NumericFunction poly_fn(std::initializer_list<Rational> coeffs, const char* label) {
    return NumericFunction::from_polynomial(Polynomial(coeffs), label);
}

NumericFunction square() { return poly_fn({Rational(0), Rational(0), Rational(1)}, "x^2"); }
NumericFunction cube() {
    return poly_fn({Rational(0), Rational(0), Rational(0), Rational(1)}, "x^3");
}

} // namespace

TEST_SUITE("uldcheck") {

    TEST_CASE("difference quotient, on and off the diagonal") {
        CHECK(difference_quotient(square(), 2.0, 1.0) == doctest::Approx(3.0));
        CHECK(difference_quotient(square(), 1.0, 1.0) == doctest::Approx(2.0));
        CHECK(difference_quotient(NumericFunction::sqrt_fn(), 4.0, 1.0) ==
              doctest::Approx(1.0 / 3.0));

        NumericFunction bare("opaque", [](double x) { return x * x; });
        CHECK(difference_quotient(bare, 2.0, 1.0) == doctest::Approx(3.0));
        CHECK_THROWS_AS(difference_quotient(bare, 1.0, 1.0), limitless::MissingDerivative);
    }

    TEST_CASE("uld constant of x^2 is 1 on any grid") {
        VerificationReport rep = verify_uld(square(), 0.0, 1.0, 50);
        CHECK(rep.empirical_constant == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.violations == 0);
        REQUIRE(rep.worst_pair.size() == 2);
    }

    TEST_CASE("uld constant of x^3 on [0,1] approaches 3 from below") {
        VerificationReport rep = verify_uld(cube(), 0.0, 1.0, 200);
        CHECK(rep.empirical_constant >= 2.9);
        CHECK(rep.empirical_constant <= 3.0);
    }

    TEST_CASE("x^(3/2) is not uniformly Lipschitz differentiable: K diverges") {
        NumericFunction f = NumericFunction::power(1.5);
        double coarse = verify_uld(f, 0.0, 1.0, 100).empirical_constant;
        double fine = verify_uld(f, 0.0, 1.0, 400).empirical_constant;
        CHECK(fine >= 1.5 * coarse);
    }

    TEST_CASE("x^(3/2) is Hoelder(1/2)-differentiable: K stays put") {
        NumericFunction f = NumericFunction::power(1.5);
        Modulus m = Modulus::hoelder(1.0, 0.5);
        double coarse = verify_m_differentiable(f, m, 0.0, 1.0, 100).empirical_constant;
        double fine = verify_m_differentiable(f, m, 0.0, 1.0, 400).empirical_constant;
        CHECK(std::fabs(fine - coarse) <= 0.1 * coarse);
        CHECK(coarse == doctest::Approx(1.0).epsilon(0.05));
    }

    TEST_CASE("m-differentiability with m = Lipschitz(1) is the uld check") {
        VerificationReport rep =
            verify_m_differentiable(square(), Modulus::lipschitz(1.0), 0.0, 1.0, 80);
        CHECK(rep.empirical_constant == doctest::Approx(1.0).epsilon(1e-12));

        VerificationReport lin = verify_m_differentiable(
            poly_fn({Rational(2), Rational(-5)}, "2-5x"), Modulus::lipschitz(1.0), -1.0, 1.0, 60);
        CHECK(lin.empirical_constant == doctest::Approx(0.0));
    }

    TEST_CASE("derivative Lipschitz bound 2K is tight for x^2") {
        VerificationReport rep =
            derivative_lipschitz_check(square(), 1.0, Modulus::lipschitz(1.0), -1.0, 1.0, 120);
        CHECK(rep.violations == 0);
        CHECK(rep.empirical_constant == doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("derivative Lipschitz holds for x^3 with K = 3 on [0,1]") {
        VerificationReport rep =
            derivative_lipschitz_check(cube(), 3.0, Modulus::lipschitz(1.0), 0.0, 1.0, 120);
        CHECK(rep.violations == 0);
        // |3x^2 - 3a^2| <= 6|x - a| via |x + a| <= 2, reached at the right edge
        CHECK(rep.empirical_constant == doctest::Approx(3.0).epsilon(0.05));
    }

    TEST_CASE("constant-derivative functions violate nothing") {
        VerificationReport rep = derivative_lipschitz_check(
            poly_fn({Rational(1), Rational(4)}, "1+4x"), 0.0, Modulus::lipschitz(1.0), 0.0, 1.0, 40);
        CHECK(rep.violations == 0);
        CHECK(rep.empirical_constant == 0.0);
    }

    TEST_CASE("quotient continuity of x^2: |Q(x,a) - Q(y,a)| = |x - y|") {
        VerificationReport rep =
            verify_quotient_continuity(square(), 1.0, Modulus::lipschitz(1.0), 0.0, 1.0, 40);
        CHECK(rep.violations == 0);
        CHECK(rep.empirical_constant == doctest::Approx(0.5).epsilon(1e-12));
        REQUIRE(rep.worst_pair.size() == 3);
    }

    TEST_CASE("quotient continuity of x^3 with K = 3") {
        VerificationReport rep =
            verify_quotient_continuity(cube(), 3.0, Modulus::lipschitz(1.0), 0.0, 1.0, 40);
        CHECK(rep.violations == 0);
        // |Q(x,a) - Q(y,a)| = |x + y + a| |x - y| <= 3 |x - y|; the ratio
        // tops out at (3 - spacing) / 2 since x = y never enters
        CHECK(rep.empirical_constant == doctest::Approx(1.5).epsilon(0.02));
    }

    TEST_CASE("quotient grid is capped per axis") {
        VerificationReport rep =
            verify_quotient_continuity(square(), 1.0, Modulus::lipschitz(1.0), 0.0, 1.0, 500);
        CHECK(rep.grid_n == 64);
    }

    TEST_CASE("derivative handle is required") {
        NumericFunction bare("opaque", [](double x) { return x * x; });
        CHECK_THROWS_AS(verify_uld(bare, 0.0, 1.0, 10), limitless::MissingDerivative);
        CHECK_THROWS_AS(verify_quotient_continuity(bare, 1.0, Modulus::lipschitz(1.0), 0, 1, 10),
                        limitless::MissingDerivative);
    }

    TEST_CASE("empirical uld constant certifies the derivative's Lipschitz bound") {
        // f' is 2K-Lipschitz on the same grid, with K straight off that grid
        NumericFunction fns[] = {
            square(), cube(),
            poly_fn({Rational(0), Rational(-1), Rational(0), Rational(0), Rational(1)}, "x^4-x")};
        for (const auto& f : fns) {
            double k = verify_uld(f, -1.0, 1.0, 200).empirical_constant;
            VerificationReport rep =
                derivative_lipschitz_check(f, k, Modulus::lipschitz(1.0), -1.0, 1.0, 200);
            CHECK(rep.violations == 0);
        }
    }

    TEST_CASE("empirical m-constant certifies quotient continuity at 2K") {
        NumericFunction f = NumericFunction::power(1.5);
        Modulus m = Modulus::hoelder(1.0, 0.5);
        double k = verify_m_differentiable(f, m, 0.0, 1.0, 64).empirical_constant;
        CHECK(verify_quotient_continuity(f, k, m, 0.0, 1.0, 64).violations == 0);

        double k2 = verify_m_differentiable(square(), Modulus::lipschitz(1.0), -1.0, 1.0, 48)
                        .empirical_constant;
        CHECK(verify_quotient_continuity(square(), k2, Modulus::lipschitz(1.0), -1.0, 1.0, 48)
                  .violations == 0);
    }

    TEST_CASE("|x| with df = sign blows past any uld constant near 0") {
        NumericFunction f = NumericFunction::abs_fn();
        double coarse = verify_uld(f, -1.0, 1.0, 100).empirical_constant;
        double fine = verify_uld(f, -1.0, 1.0, 400).empirical_constant;
        CHECK(coarse > 20.0);
        CHECK(fine >= 2.0 * coarse);
    }

    TEST_CASE("reports are deterministic") {
        NumericFunction f = NumericFunction::power(1.5);
        VerificationReport a = verify_uld(f, 0.0, 1.0, 73);
        VerificationReport b = verify_uld(f, 0.0, 1.0, 73);
        CHECK(a.empirical_constant == b.empirical_constant);
        CHECK(a.worst_pair == b.worst_pair);
        CHECK(a.violations == b.violations);
    }

    TEST_CASE("grid constants never exceed certified bounds") {
        Polynomial p{Rational(1, 2), Rational(-2), Rational(0), Rational(1)}; // x^3 - 2x + 1/2
        NumericFunction f = NumericFunction::from_polynomial(p, "p");
        double grid_k = verify_uld(f, -1.0, 1.0, 150).empirical_constant;
        double certified =
            basic_estimate_constant(p, limitless::Interval(Rational(-1), Rational(1)), 5)
                .value.to_double();
        CHECK(grid_k <= certified + 1e-9);
    }

    TEST_CASE("report JSON carries the documented fields") {
        VerificationReport rep = verify_uld(square(), 0.0, 1.0, 20);
        limitless::Json j = limitless::to_json(rep);
        CHECK(j.at("inequality") == "uld");
        CHECK(j.at("grid").at("n") == 20);
        CHECK(j.at("empirical_constant").get<double>() == rep.empirical_constant);
        CHECK(j.at("worst_pair").size() == 2);
        CHECK(j.at("violations") == 0);
    }
}

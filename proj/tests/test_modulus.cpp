#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "limitless/json_io.hpp"
#include "limitless/modulus.hpp"

using limitless::concave_majorant;
using limitless::empirical_oscillation;
using limitless::Modulus;
using limitless::NumericFunction;
using limitless::read_sample_csv;
using limitless::SampleSet;

namespace {

// Monotonize independently of the library: sort by h, keep running max.
std::vector<Modulus::Vertex> monotonized_with_origin(const SampleSet& s) {
    std::vector<Modulus::Vertex> pts;
    for (auto [h, g] : s.points)
        if (h > 0) pts.emplace_back(h, g);
    std::sort(pts.begin(), pts.end());
    std::vector<Modulus::Vertex> out{{0.0, 0.0}};
    for (auto& p : pts) {
        double g = std::max(out.back().second, p.second);
        if (out.back().first == p.first)
            out.back().second = g;
        else
            out.emplace_back(p.first, g);
    }
    return out;
}

// Least concave majorant of a finite point set at abscissa t: the best
// chord over all point pairs that bracket t.
double envelope_at(const std::vector<Modulus::Vertex>& pts, double t) {
    double best = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].first == t) best = std::max(best, pts[i].second);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (!(pts[i].first < t && t < pts[j].first)) continue;
            double lam = (t - pts[i].first) / (pts[j].first - pts[i].first);
            best = std::max(best, pts[i].second + lam * (pts[j].second - pts[i].second));
        }
    }
    return best;
}

} // namespace

TEST_SUITE("moduli") {

    TEST_CASE("evaluation per kind") {
        CHECK(Modulus::lipschitz(1.0)(0.5) == 0.5);
        CHECK(Modulus::hoelder(1.0, 0.5)(0.25) == doctest::Approx(0.5));
        Modulus plc = Modulus::piecewise_linear_concave({{0, 0}, {1, 1}, {2, 1.2}});
        CHECK(plc(1.5) == doctest::Approx(1.1));
        CHECK(plc(0.0) == 0.0);
        CHECK(plc(2.0) == doctest::Approx(1.2));
        // beyond the last vertex the final slope continues
        CHECK(plc(3.0) == doctest::Approx(1.4));
        CHECK_THROWS_AS(plc(-0.1), limitless::NegativeArgument);
        CHECK_THROWS_AS(Modulus::lipschitz(2.0)(-1.0), limitless::NegativeArgument);
    }

    TEST_CASE("constructor validation") {
        CHECK_THROWS_AS(Modulus::lipschitz(-1.0), limitless::InvalidModulus);
        CHECK_THROWS_AS(Modulus::hoelder(1.0, 0.0), limitless::InvalidModulus);
        CHECK_THROWS_AS(Modulus::hoelder(1.0, 1.5), limitless::InvalidModulus);
        CHECK_THROWS_AS(Modulus::piecewise_linear_concave({}), limitless::InvalidModulus);
        CHECK_THROWS_AS(Modulus::piecewise_linear_concave({{0.5, 0}, {1, 1}}),
                        limitless::InvalidModulus);
        CHECK_THROWS_AS(Modulus::piecewise_linear_concave({{0, 0}, {1, 1}, {1, 2}}),
                        limitless::InvalidModulus);
        // convex corner: slopes increase
        CHECK_THROWS_AS(Modulus::piecewise_linear_concave({{0, 0}, {1, 0.1}, {2, 1}}),
                        limitless::InvalidModulus);
        // decreasing tail
        CHECK_THROWS_AS(Modulus::piecewise_linear_concave({{0, 0}, {1, 1}, {2, 0.5}}),
                        limitless::InvalidModulus);
        CHECK_NOTHROW(Modulus::piecewise_linear_concave({{0, 0}, {1, 1}, {2, 1.2}}));
    }

    TEST_CASE("subadditivity checks") {
        CHECK(check_subadditive(Modulus::hoelder(1.0, 0.5), 100, 4.0).passed);

        auto lip = check_subadditive(Modulus::lipschitz(3.0), 50, 2.0);
        CHECK(lip.passed);
        CHECK(lip.worst_margin == doctest::Approx(0.0).epsilon(1e-12));

        // a deliberately convex map, smuggled past the constructor
        Modulus convex = Modulus::piecewise_unchecked({{0, 0}, {1, 0.1}, {2, 1}});
        auto rep = check_subadditive(convex, 3, 1.0);
        CHECK(!rep.passed);
        CHECK(rep.worst_s == doctest::Approx(1.0));
        CHECK(rep.worst_t == doctest::Approx(1.0));
        CHECK(rep.worst_margin == doctest::Approx(0.8));
        CHECK(!check_subadditive(convex, 5, 2.0).passed);
    }

    TEST_CASE("concave majorant: known hulls") {
        Modulus collinear = concave_majorant({{{0, 0}, {1, 1}, {2, 2}}});
        CHECK(collinear.vertices() == std::vector<Modulus::Vertex>{{0, 0}, {2, 2}});

        Modulus bent = concave_majorant({{{0, 0}, {1, 1}, {2, 1.2}}});
        CHECK(bent.vertices() == std::vector<Modulus::Vertex>{{0, 0}, {1, 1}, {2, 1.2}});

        Modulus lifted = concave_majorant({{{0, 0}, {1, 0.5}, {2, 2}}});
        CHECK(lifted.vertices() == std::vector<Modulus::Vertex>{{0, 0}, {2, 2}});
        CHECK(lifted(1.0) == doctest::Approx(1.0));

        CHECK_THROWS_AS(concave_majorant({{{-1, 0}}}), limitless::NegativeSample);
        CHECK_THROWS_AS(concave_majorant({{{1, -2}}}), limitless::NegativeSample);
    }

    TEST_CASE("concave majorant equals the brute-force envelope") {
        std::mt19937 rng(2718);
        std::uniform_real_distribution<double> hd(0.01, 5.0), gd(0.0, 3.0);
        std::uniform_int_distribution<int> count(1, 10);
        for (int trial = 0; trial < 200; ++trial) {
            SampleSet s;
            int n = count(rng);
            for (int i = 0; i < n; ++i) s.points.emplace_back(hd(rng), gd(rng));
            Modulus m = concave_majorant(s);

            // hull vertices come from the monotonized points plus the origin
            auto mono = monotonized_with_origin(s);
            for (auto v : m.vertices())
                CHECK(std::count(mono.begin(), mono.end(), v) == 1);

            // slopes non-increasing and non-negative
            auto vs = m.vertices();
            double prev = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
                double slope = (vs[i + 1].second - vs[i].second) / (vs[i + 1].first - vs[i].first);
                CHECK(slope <= prev + 1e-12);
                CHECK(slope >= -1e-12);
                prev = slope;
            }

            // domination of every sample, and tightness against the envelope
            for (auto [h, g] : s.points) CHECK(m(h) >= g - 1e-12);
            for (auto [h, g] : mono) CHECK(m(h) == doctest::Approx(envelope_at(mono, h)));

            // accepted by the validating constructor and subadditive
            CHECK_NOTHROW(Modulus::piecewise_linear_concave(m.vertices()));
            if (vs.back().first > 0) {
                int grid = trial < 30 ? 200 : 60;
                CHECK(check_subadditive(m, grid, 2.0 * vs.back().first).passed);
            }
        }
    }

    TEST_CASE("empirical oscillation of the identity is the separation") {
        SampleSet s = empirical_oscillation(NumericFunction::from_polynomial(
                                                limitless::Polynomial::variable(), "x"),
                                            0.0, 1.0, 51, 10);
        CHECK(s.points.size() == 10);
        for (auto [h, g] : s.points) CHECK(g == doctest::Approx(h).epsilon(1e-12));
    }

    TEST_CASE("empirical oscillation of x^2 on [0,1] is 2h - h^2") {
        limitless::Polynomial sq{limitless::Rational(0), limitless::Rational(0),
                                 limitless::Rational(1)};
        SampleSet s = empirical_oscillation(NumericFunction::from_polynomial(sq, "x^2"), 0.0, 1.0,
                                            101, 20);
        for (auto [h, g] : s.points) CHECK(g == doctest::Approx(2 * h - h * h).epsilon(1e-12));
    }

    TEST_CASE("empirical oscillation of sqrt on [0,1] is sqrt(h)") {
        SampleSet s = empirical_oscillation(NumericFunction::sqrt_fn(), 0.0, 1.0, 101, 20);
        for (auto [h, g] : s.points) CHECK(g == doctest::Approx(std::sqrt(h)).epsilon(1e-12));
    }

    TEST_CASE("oscillation fails fast off the function's domain") {
        CHECK_THROWS_AS(empirical_oscillation(NumericFunction::sqrt_fn(), -1.0, 1.0, 11, 5),
                        limitless::EvaluationFailure);
    }

    TEST_CASE("pipeline: the fitted modulus dominates every grid pair") {
        const int grid_n = 60;
        NumericFunction f = NumericFunction::sin_fn();
        SampleSet s = empirical_oscillation(f, 0.0, 3.0, grid_n, grid_n - 1);
        Modulus m = concave_majorant(s);
        for (int i = 0; i < grid_n; ++i) {
            for (int j = 0; j < grid_n; ++j) {
                double x = 3.0 * i / (grid_n - 1), a = 3.0 * j / (grid_n - 1);
                CHECK(std::fabs(f(x) - f(a)) <= m(std::fabs(x - a)) + 1e-9);
            }
        }
    }

    TEST_CASE("CSV ingestion") {
        std::istringstream good("h,g\n0.5,0.3\n1.0,0.4\n\n2.0,0.9\n");
        SampleSet s = read_sample_csv(good);
        REQUIRE(s.points.size() == 3);
        CHECK(s.points[1] == std::pair<double, double>{1.0, 0.4});

        std::istringstream crlf("h,g\r\n1,2\r\n");
        CHECK(read_sample_csv(crlf).points.size() == 1);

        std::istringstream no_header("0.5,0.3\n");
        CHECK_THROWS_AS(read_sample_csv(no_header), limitless::CsvError);
        std::istringstream bad_field("h,g\n1,oops\n");
        CHECK_THROWS_AS(read_sample_csv(bad_field), limitless::CsvError);
        std::istringstream missing("h,g\n1\n");
        CHECK_THROWS_AS(read_sample_csv(missing), limitless::CsvError);
        std::istringstream empty("");
        CHECK_THROWS_AS(read_sample_csv(empty), limitless::CsvError);
    }

    TEST_CASE("modulus JSON round trip") {
        for (const Modulus& m :
             {Modulus::lipschitz(2.5), Modulus::hoelder(1.25, 0.5),
              Modulus::piecewise_linear_concave({{0, 0}, {1, 1}, {2, 1.2}})}) {
            Modulus back = limitless::modulus_from_json(limitless::to_json(m));
            CHECK(back.kind() == m.kind());
            for (double t : {0.0, 0.3, 1.0, 1.7, 2.5}) CHECK(back(t) == m(t));
        }
    }
}

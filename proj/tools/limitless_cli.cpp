// Command-line front end: each subcommand maps one capability of the
// library onto text/JSON output. Exit codes: 0 success, 1 when a
// verification or certification comes back negative, 2 for usage, parse,
// or evaluation errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "limitless/certify.hpp"
#include "limitless/expr.hpp"
#include "limitless/json_io.hpp"
#include "limitless/modulus.hpp"
#include "limitless/multivar.hpp"
#include "limitless/quad.hpp"
#include "limitless/uldcheck.hpp"

namespace {

using namespace limitless;

struct CommandResult {
    int code = 0;
    std::string text;
    std::optional<Json> payload;
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int default_depth() {
    if (const char* s = std::getenv("LIMITLESS_DEPTH")) {
        try {
            int d = std::stoi(s);
            if (d >= 0 && d <= 14) return d;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring bad LIMITLESS_DEPTH value '" << s << "'\n";
    }
    return 6;
}

Rational arg_rational(const std::string& s) { return Rational::from_string(s); }

Interval arg_interval(const std::vector<std::string>& lohi) {
    return Interval(arg_rational(lohi[0]), arg_rational(lohi[1]));
}

Polynomial arg_polynomial(const std::string& src) { return to_polynomial(parse_expression(src)); }

// "lipschitz:C", "hoelder:C:GAMMA", or "file:PATH" pointing at a modulus
// JSON document (e.g. the output of modulus-fit).
Modulus arg_modulus(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);

    if (parts.size() == 2 && parts[0] == "lipschitz")
        return Modulus::lipschitz(arg_rational(parts[1]).to_double());
    if (parts.size() == 3 && parts[0] == "hoelder")
        return Modulus::hoelder(arg_rational(parts[1]).to_double(),
                                arg_rational(parts[2]).to_double());
    if (parts.size() == 2 && parts[0] == "file") {
        std::ifstream in(parts[1]);
        if (!in) throw Error("cannot open modulus file '" + parts[1] + "'");
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded()) throw Error("modulus file '" + parts[1] + "' is not valid JSON");
        try {
            return modulus_from_json(j);
        } catch (const Json::exception& e) {
            throw Error("modulus file '" + parts[1] + "': " + e.what());
        }
    }
    throw Error("bad modulus spec '" + spec +
                "' (want lipschitz:C, hoelder:C:GAMMA, or file:PATH)");
}

std::string describe(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.inequality << ": empirical constant " << fmt17(rep.empirical_constant);
    if (!rep.worst_pair.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < rep.worst_pair.size(); ++i)
            os << (i ? ", " : "") << fmt17(rep.worst_pair[i]);
        os << ")";
    }
    if (!std::isnan(rep.checked_bound))
        os << "; " << rep.violations << " violation(s) against " << fmt17(rep.checked_bound);
    return os.str();
}

int report_exit_code(const VerificationReport& rep) { return rep.violations > 0 ? 1 : 0; }

Rect arg_rect(const std::vector<std::string>& abcd) {
    return Rect{arg_rational(abcd[0]).to_double(), arg_rational(abcd[1]).to_double(),
                arg_rational(abcd[2]).to_double(), arg_rational(abcd[3]).to_double()};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"limitless: exact differentiation by division, certified bounds,\n"
                 "moduli of continuity, and enclosure integration"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "print only the JSON payload");

    std::function<CommandResult()> action;

    // ---- exact polynomial calculus ------------------------------------
    {
        auto* cmd = app.add_subcommand("diff", "derivative of a polynomial");
        auto expr = std::make_shared<std::string>();
        cmd->add_option("expr", *expr, "polynomial in x")->required();
        cmd->callback([&action, expr] {
            action = [expr]() -> CommandResult {
                Polynomial d = derivative(arg_polynomial(*expr));
                return {0, to_string(d), to_json(d)};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("factor-q", "q with p(x) - p(a) = (x - a) q(x, a)");
        auto expr = std::make_shared<std::string>();
        cmd->add_option("expr", *expr, "polynomial in x")->required();
        cmd->callback([&action, expr] {
            action = [expr]() -> CommandResult {
                BivariatePolynomial q = divided_difference(arg_polynomial(*expr));
                return {0, to_string(q), to_json(q)};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "factor-r", "r with p(x) - p(a) - p'(a)(x - a) = (x - a)^2 r(x, a)");
        auto expr = std::make_shared<std::string>();
        cmd->add_option("expr", *expr, "polynomial in x")->required();
        cmd->callback([&action, expr] {
            action = [expr]() -> CommandResult {
                BivariatePolynomial r = tangent_remainder(arg_polynomial(*expr));
                return {0, to_string(r), to_json(r)};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("integrate", "exact integral of a polynomial");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv, "integration range a b")->expected(2)->required();
        cmd->callback([&action, expr, iv] {
            action = [expr, iv]() -> CommandResult {
                Rational a = arg_rational((*iv)[0]), b = arg_rational((*iv)[1]);
                Polynomial p = arg_polynomial(*expr);
                Rational v = integrate_poly(p, a, b);
                Json j{{"integral", v.frac_str()}, {"antiderivative", to_json(antiderivative(p))}};
                return {0, v.str(), j};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("power-sum", "1^k + 2^k + ... + n^k, exact");
        auto n = std::make_shared<long>();
        auto k = std::make_shared<long>();
        cmd->add_option("n", *n)->required();
        cmd->add_option("k", *k)->required();
        cmd->callback([&action, n, k] {
            action = [n, k]() -> CommandResult {
                Integer s = power_sum(*n, *k);
                return {0, s.get_str(), Json{{"sum", s.get_str()}}};
            };
        });
    }

    // ---- certified bounds and certificates -----------------------------
    {
        auto* cmd = app.add_subcommand("bound-k", "certified basic-estimate constant K");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        auto depth = std::make_shared<int>(default_depth());
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv)->expected(2)->required();
        cmd->add_option("--depth", *depth, "subdivision depth (2^depth boxes per axis)");
        cmd->callback([&action, expr, iv, depth] {
            action = [expr, iv, depth]() -> CommandResult {
                CertifiedBound k =
                    basic_estimate_constant(arg_polynomial(*expr), arg_interval(*iv), *depth);
                std::string text = "K = " + k.value.str() + " (~" + fmt17(k.value.to_double()) +
                                   ") at depth " + std::to_string(k.depth);
                return {0, text, to_json(k)};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("bound-m", "certified derivative bound M");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        auto depth = std::make_shared<int>(default_depth());
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv)->expected(2)->required();
        cmd->add_option("--depth", *depth);
        cmd->callback([&action, expr, iv, depth] {
            action = [expr, iv, depth]() -> CommandResult {
                CertifiedBound m =
                    derivative_bound(arg_polynomial(*expr), arg_interval(*iv), *depth);
                std::string text = "M = " + m.value.str() + " (~" + fmt17(m.value.to_double()) +
                                   ") at depth " + std::to_string(m.depth);
                return {0, text, to_json(m)};
            };
        });
    }
    {
        auto* cmd =
            app.add_subcommand("monotone", "certify p' >= C and emit a step-by-step certificate");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        auto c = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(default_depth());
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv)->expected(2)->required();
        cmd->add_option("--c", *c, "positive lower bound on p'")->required();
        cmd->add_option("--depth", *depth);
        cmd->callback([&action, expr, iv, c, depth] {
            action = [expr, iv, c, depth]() -> CommandResult {
                MonotonicityCertificate cert = monotonicity_certificate(
                    arg_polynomial(*expr), arg_interval(*iv), arg_rational(*c), *depth);
                validate(cert);
                std::ostringstream os;
                os << "certified: p is non-decreasing on [" << cert.domain.lo().str() << ", "
                   << cert.domain.hi().str() << "] (K = " << cert.k.value.str() << ", "
                   << cert.partition.size() - 1 << " step(s), p(A) = " << cert.values.front().str()
                   << " <= p(B) = " << cert.values.back().str() << ")";
                return {0, os.str(), to_json(cert)};
            };
        });
    }

    // ---- enclosure integration -----------------------------------------
    {
        auto* cmd = app.add_subcommand("enclose", "certified Riemann enclosure of an integral");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        auto n = std::make_shared<long>(100);
        auto lips = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(default_depth());
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv)->expected(2)->required();
        cmd->add_option("-n,--panels", *n, "number of midpoint panels");
        cmd->add_option("--lipschitz", *lips,
                        "Lipschitz constant for f (derived automatically for polynomials)");
        cmd->add_option("--depth", *depth);
        cmd->callback([&action, expr, iv, n, lips, depth] {
            action = [expr, iv, n, lips, depth]() -> CommandResult {
                ExprPtr tree = parse_expression(*expr);
                double a = arg_rational((*iv)[0]).to_double();
                double b = arg_rational((*iv)[1]).to_double();
                double l;
                if (!lips->empty()) {
                    l = arg_rational(*lips).to_double();
                } else if (is_polynomial(tree)) {
                    l = derivative_bound(to_polynomial(tree), arg_interval(*iv), *depth)
                            .value.to_double();
                } else {
                    throw Error("supply --lipschitz for non-polynomial functions");
                }
                IntegralEnclosure enc = riemann_enclosure(to_numeric_function(tree), l, a, b, *n);
                std::string text = "integral in [" + fmt17(enc.lower) + ", " + fmt17(enc.upper) +
                                   "] (midpoint sum " + fmt17(enc.midpoint_sum) + ", L = " +
                                   fmt17(enc.lipschitz_l) + ", " + std::to_string(enc.n_panels) +
                                   " panels)";
                return {0, text, to_json(enc)};
            };
        });
    }

    // ---- grid verification ----------------------------------------------
    {
        auto* cmd = app.add_subcommand("verify-uld", "empirical uniform-Lipschitz constant");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        auto grid = std::make_shared<int>(200);
        auto k = std::make_shared<std::string>();
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv)->expected(2)->required();
        cmd->add_option("--grid", *grid);
        cmd->add_option("--k", *k, "also count violations against this constant");
        cmd->callback([&action, expr, iv, grid, k] {
            action = [expr, iv, grid, k]() -> CommandResult {
                NumericFunction f = to_numeric_function(parse_expression(*expr));
                double lo = arg_rational((*iv)[0]).to_double();
                double hi = arg_rational((*iv)[1]).to_double();
                VerificationReport rep = verify_uld(f, lo, hi, *grid);
                if (!k->empty()) {
                    rep.checked_bound = arg_rational(*k).to_double();
                    if (rep.empirical_constant > rep.checked_bound)
                        rep.violations = 1; // the worst pair already witnesses it
                }
                return {report_exit_code(rep), describe(rep), to_json(rep)};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("verify-m", "empirical m-differentiability constant");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        auto grid = std::make_shared<int>(200);
        auto mod = std::make_shared<std::string>();
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv)->expected(2)->required();
        cmd->add_option("--grid", *grid);
        cmd->add_option("--modulus", *mod, "lipschitz:C | hoelder:C:G | file:PATH")->required();
        cmd->callback([&action, expr, iv, grid, mod] {
            action = [expr, iv, grid, mod]() -> CommandResult {
                NumericFunction f = to_numeric_function(parse_expression(*expr));
                VerificationReport rep = verify_m_differentiable(
                    f, arg_modulus(*mod), arg_rational((*iv)[0]).to_double(),
                    arg_rational((*iv)[1]).to_double(), *grid);
                return {report_exit_code(rep), describe(rep), to_json(rep)};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "verify-quotient", "difference-quotient continuity |Q(x,a) - Q(y,a)| <= 2K m(|x-y|)");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        auto grid = std::make_shared<int>(64);
        auto mod = std::make_shared<std::string>("lipschitz:1");
        auto k = std::make_shared<std::string>();
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv)->expected(2)->required();
        cmd->add_option("--grid", *grid, "points per axis (capped at 64)");
        cmd->add_option("--modulus", *mod);
        cmd->add_option("--k", *k)->required();
        cmd->callback([&action, expr, iv, grid, mod, k] {
            action = [expr, iv, grid, mod, k]() -> CommandResult {
                NumericFunction f = to_numeric_function(parse_expression(*expr));
                VerificationReport rep = verify_quotient_continuity(
                    f, arg_rational(*k).to_double(), arg_modulus(*mod),
                    arg_rational((*iv)[0]).to_double(), arg_rational((*iv)[1]).to_double(), *grid);
                return {report_exit_code(rep), describe(rep), to_json(rep)};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "derivative-lipschitz", "check |f'(x) - f'(a)| <= 2K m(|x - a|) on a grid");
        auto expr = std::make_shared<std::string>();
        auto iv = std::make_shared<std::vector<std::string>>();
        auto grid = std::make_shared<int>(200);
        auto mod = std::make_shared<std::string>("lipschitz:1");
        auto k = std::make_shared<std::string>();
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--interval", *iv)->expected(2)->required();
        cmd->add_option("--grid", *grid);
        cmd->add_option("--modulus", *mod);
        cmd->add_option("--k", *k)->required();
        cmd->callback([&action, expr, iv, grid, mod, k] {
            action = [expr, iv, grid, mod, k]() -> CommandResult {
                NumericFunction f = to_numeric_function(parse_expression(*expr));
                VerificationReport rep = derivative_lipschitz_check(
                    f, arg_rational(*k).to_double(), arg_modulus(*mod),
                    arg_rational((*iv)[0]).to_double(), arg_rational((*iv)[1]).to_double(), *grid);
                return {report_exit_code(rep), describe(rep), to_json(rep)};
            };
        });
    }

    // ---- moduli of continuity --------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "modulus-fit", "fit a concave piecewise-linear modulus to h,g oscillation samples");
        auto csv = std::make_shared<std::string>();
        cmd->add_option("--csv", *csv, "two-column CSV with header 'h,g'")->required();
        cmd->callback([&action, csv] {
            action = [csv]() -> CommandResult {
                std::ifstream in(*csv);
                if (!in) throw CsvError("cannot open '" + *csv + "'");
                Modulus m = concave_majorant(read_sample_csv(in));
                std::ostringstream os;
                os << "modulus with " << m.vertices().size() << " vertices:";
                for (auto [h, v] : m.vertices()) os << " (" << fmt17(h) << ", " << fmt17(v) << ")";
                return {0, os.str(), to_json(m)};
            };
        });
    }

    // ---- two variables ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "multivar-verify",
            "empirical multivariable K, then gradient continuity at 6K on the same grid");
        auto expr = std::make_shared<std::string>();
        auto box = std::make_shared<std::vector<std::string>>();
        auto grid = std::make_shared<int>(40);
        auto dirs = std::make_shared<int>(16);
        auto mags = std::make_shared<int>(8);
        auto mod = std::make_shared<std::string>("lipschitz:1");
        cmd->add_option("expr", *expr, "function of x and y")->required();
        cmd->add_option("--box", *box, "ax bx ay by")->expected(4)->required();
        cmd->add_option("--grid", *grid);
        cmd->add_option("--dirs", *dirs);
        cmd->add_option("--mags", *mags);
        cmd->add_option("--modulus", *mod);
        cmd->callback([&action, expr, box, grid, dirs, mags, mod] {
            action = [expr, box, grid, dirs, mags, mod]() -> CommandResult {
                VectorFunction2 f = to_vector_function(parse_expression(*expr));
                Rect r = arg_rect(*box);
                Modulus m = arg_modulus(*mod);
                VerificationReport diff =
                    verify_multivar_differentiable(f, m, r, *grid, *dirs, *mags);
                VerificationReport grad =
                    verify_gradient_continuity(f, diff.empirical_constant, m, r, *grid);
                Json j{{"differentiability", to_json(diff)},
                       {"gradient_continuity", to_json(grad)}};
                std::string text = describe(diff) + "\n" + describe(grad);
                return {report_exit_code(grad), text, j};
            };
        });
    }
    {
        auto* cmd =
            app.add_subcommand("greens-loop", "edge-path loop residual of f around a rectangle");
        auto expr = std::make_shared<std::string>();
        auto rect = std::make_shared<std::vector<std::string>>();
        auto n = std::make_shared<int>(200);
        auto tol = std::make_shared<std::string>();
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--rect", *rect, "a b c d")->expected(4)->required();
        cmd->add_option("-n,--panels", *n);
        cmd->add_option("--tol", *tol, "fail (exit 1) when |residual| exceeds this");
        cmd->callback([&action, expr, rect, n, tol] {
            action = [expr, rect, n, tol]() -> CommandResult {
                VectorFunction2 f = to_vector_function(parse_expression(*expr));
                double resid = greens_loop_residual(f, arg_rect(*rect), *n);
                int code = 0;
                if (!tol->empty() && std::fabs(resid) > arg_rational(*tol).to_double()) code = 1;
                return {code, "loop residual = " + fmt17(resid),
                        Json{{"residual", resid}, {"panels", *n}}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "mixed-partials", "integral of f_xy - f_yx over a rectangle, with loop cross-check");
        auto expr = std::make_shared<std::string>();
        auto rect = std::make_shared<std::vector<std::string>>();
        auto n = std::make_shared<int>(100);
        auto tol = std::make_shared<std::string>();
        cmd->add_option("expr", *expr)->required();
        cmd->add_option("--rect", *rect, "a b c d")->expected(4)->required();
        cmd->add_option("-n,--panels", *n);
        cmd->add_option("--tol", *tol);
        cmd->callback([&action, expr, rect, n, tol] {
            action = [expr, rect, n, tol]() -> CommandResult {
                VectorFunction2 f = to_vector_function(parse_expression(*expr));
                MixedPartialsReport rep =
                    tol->empty()
                        ? mixed_partials_check(f, arg_rect(*rect), *n)
                        : mixed_partials_check(f, arg_rect(*rect), *n,
                                               arg_rational(*tol).to_double());
                std::ostringstream os;
                os << "integral of (f_xy - f_yx) = " << fmt17(rep.integral)
                   << (rep.within_tolerance ? " (within tolerance" : " (OUTSIDE tolerance")
                   << ", loop residual " << fmt17(rep.loop_residual)
                   << (rep.agrees_with_loop ? ", agrees)" : ", DISAGREES)");
                int code = rep.within_tolerance && rep.agrees_with_loop ? 0 : 1;
                return {code, os.str(), to_json(rep)};
            };
        });
    }

    // let the global --json flag appear after the subcommand too
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        CommandResult result = action();
        if (json_mode && result.payload)
            std::cout << result.payload->dump(2) << "\n";
        else if (!result.text.empty())
            std::cout << result.text << "\n";
        return result.code;
    } catch (const DerivativeLowerBoundNotCertified& e) {
        std::cerr << "not certified: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "limitless/multivar.hpp"
#include "limitless/numeric_function.hpp"
#include "limitless/polynomial.hpp"

namespace limitless {

// Variable indices used by the expression tree.
inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarA = 2; // appears only in printed bivariate factors

enum class Builtin { sqrt_fn, abs_fn, sin_fn, cos_fn, exp_fn, sign_fn, pow_fn };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree: rational literals, variables, + - * with
// integer ^, unary minus, and the named built-ins (pow carries a real
// exponent and is defined on x >= 0).
struct Expr {
    enum class Kind { number, variable, negate, add, subtract, multiply, int_pow, call };

    Kind kind;
    Rational value;             // number
    int var = kVarX;            // variable
    ExprPtr lhs, rhs;           // children
    long exponent = 0;          // int_pow
    Builtin fn = Builtin::sqrt_fn;
    double param = 0.0;         // pow_fn

    static ExprPtr number(Rational v);
    static ExprPtr variable(int var);
    static ExprPtr negate(ExprPtr e);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr subtract(ExprPtr a, ExprPtr b);
    static ExprPtr multiply(ExprPtr a, ExprPtr b);
    static ExprPtr int_pow(ExprPtr base, long n);
    static ExprPtr call(Builtin fn, ExprPtr arg, double param = 0.0);
};

// Recursive-descent parse; '^' takes an integer exponent and binds tighter
// than unary minus. Throws SyntaxError with the offending position.
ExprPtr parse_expression(std::string_view source);

bool uses_variable(const ExprPtr& e, int var);

// Exact lowering for trees built from literals, x, + - * and non-negative
// integer powers. Throws NonPolynomial otherwise.
Polynomial to_polynomial(const ExprPtr& e);
bool is_polynomial(const ExprPtr& e);

// Same lowering over the variables x and a, for re-parsing printed factors.
BivariatePolynomial to_bivariate(const ExprPtr& e);

// Partial derivative with respect to x (var = kVarX) or y, symbolic.
ExprPtr differentiate(const ExprPtr& e, int var);

double eval_expr(const ExprPtr& e, double x, double y = 0.0);

// Polynomial trees become exact-backed functions; anything else evaluates
// the tree with a symbolically differentiated derivative handle.
NumericFunction to_numeric_function(const ExprPtr& e);

// Two-variable lowering with symbolic gradient and mixed second partials.
VectorFunction2 to_vector_function(const ExprPtr& e);

std::string to_string(const ExprPtr& e);
std::string to_string(const Polynomial& p);
std::string to_string(const BivariatePolynomial& b);

} // namespace limitless

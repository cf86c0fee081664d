#include "limitless/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>

namespace limitless {

ExprPtr Expr::number(Rational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::number;
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::variable(int var) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::variable;
    e->var = var;
    return e;
}

ExprPtr Expr::negate(ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::negate;
    e->lhs = std::move(child);
    return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::add;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::subtract(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::subtract;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::multiply(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::multiply;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::int_pow(ExprPtr base, long n) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::int_pow;
    e->lhs = std::move(base);
    e->exponent = n;
    return e;
}

ExprPtr Expr::call(Builtin fn, ExprPtr arg, double param) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::call;
    e->fn = fn;
    e->lhs = std::move(arg);
    e->param = param;
    return e;
}

namespace {

enum class TokKind { number, name, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    TokKind kind;
    std::size_t pos;
    std::string text;
    Rational value; // number tokens
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_.pos = i_;
        tok_.text.clear();
        if (i_ >= src_.size()) {
            tok_.kind = TokKind::end;
            return;
        }
        char c = src_[i_];
        switch (c) {
        case '+': tok_.kind = TokKind::plus; ++i_; return;
        case '-': tok_.kind = TokKind::minus; ++i_; return;
        case '*': tok_.kind = TokKind::star; ++i_; return;
        case '/': tok_.kind = TokKind::slash; ++i_; return;
        case '^': tok_.kind = TokKind::caret; ++i_; return;
        case '(': tok_.kind = TokKind::lparen; ++i_; return;
        case ')': tok_.kind = TokKind::rparen; ++i_; return;
        case ',': tok_.kind = TokKind::comma; ++i_; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            tok_.kind = TokKind::name;
            tok_.text = std::string(src_.substr(start, i_ - start));
            return;
        }
        throw SyntaxError(i_, std::string("unexpected character '") + c + "'");
    }

    void lex_number() {
        std::size_t start = i_;
        bool seen_digit = false;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
            ++i_;
            seen_digit = true;
        }
        if (i_ < src_.size() && src_[i_] == '.') {
            ++i_;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                ++i_;
                seen_digit = true;
            }
        }
        if (!seen_digit) throw SyntaxError(start, "malformed number");
        // exponent only when it is actually followed by digits, so that
        // "2e3" is a number while "exp" stays an identifier boundary away
        if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
            std::size_t j = i_ + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
            if (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
                i_ = j;
                while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            }
        }
        tok_.kind = TokKind::number;
        tok_.text = std::string(src_.substr(start, i_ - start));
        try {
            tok_.value = Rational::from_string(tok_.text);
        } catch (const Error& e) {
            throw SyntaxError(start, e.what());
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = expression();
        const Token& t = lex_.peek();
        if (t.kind != TokKind::end)
            throw SyntaxError(t.pos, "unexpected trailing input");
        return e;
    }

private:
    ExprPtr expression() {
        ExprPtr e = term();
        for (;;) {
            TokKind k = lex_.peek().kind;
            if (k == TokKind::plus) {
                lex_.next();
                e = Expr::add(std::move(e), term());
            } else if (k == TokKind::minus) {
                lex_.next();
                e = Expr::subtract(std::move(e), term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (lex_.peek().kind == TokKind::star) {
            lex_.next();
            e = Expr::multiply(std::move(e), factor());
        }
        return e;
    }

    ExprPtr factor() {
        if (lex_.peek().kind == TokKind::minus) {
            lex_.next();
            return Expr::negate(factor());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (lex_.peek().kind != TokKind::caret) return base;
        lex_.next();
        bool neg = false;
        if (lex_.peek().kind == TokKind::minus) {
            lex_.next();
            neg = true;
        }
        Token t = expect(TokKind::number, "integer exponent");
        if (!t.value.is_integer() || !t.value.num().fits_slong_p())
            throw SyntaxError(t.pos, "exponent must be a (small) integer");
        long n = t.value.num().get_si();
        return Expr::int_pow(std::move(base), neg ? -n : n);
    }

    ExprPtr atom() {
        Token t = lex_.next();
        switch (t.kind) {
        case TokKind::number:
            return Expr::number(fold_fraction(t.value));
        case TokKind::lparen: {
            ExprPtr e = expression();
            expect(TokKind::rparen, "')'");
            return e;
        }
        case TokKind::name:
            return name_atom(t);
        default:
            throw SyntaxError(t.pos, "expected a number, variable, or '('");
        }
    }

    // "1/2" is a rational literal, not a division: fold a slash directly
    // after a numeric atom.
    Rational fold_fraction(const Rational& num) {
        if (lex_.peek().kind != TokKind::slash) return num;
        lex_.next();
        Token d = expect(TokKind::number, "denominator");
        if (d.value.is_zero()) throw SyntaxError(d.pos, "zero denominator");
        return num / d.value;
    }

    ExprPtr name_atom(const Token& t) {
        if (t.text == "x") return Expr::variable(kVarX);
        if (t.text == "y") return Expr::variable(kVarY);
        if (t.text == "a") return Expr::variable(kVarA);

        static const std::map<std::string, Builtin> fns = {
            {"sqrt", Builtin::sqrt_fn}, {"abs", Builtin::abs_fn}, {"sin", Builtin::sin_fn},
            {"cos", Builtin::cos_fn},   {"exp", Builtin::exp_fn}, {"sign", Builtin::sign_fn},
            {"pow", Builtin::pow_fn}};
        auto it = fns.find(t.text);
        if (it == fns.end()) throw SyntaxError(t.pos, "unknown identifier '" + t.text + "'");

        expect(TokKind::lparen, "'('");
        ExprPtr arg = expression();
        double param = 0.0;
        if (it->second == Builtin::pow_fn) {
            expect(TokKind::comma, "',' and an exponent");
            bool neg = false;
            if (lex_.peek().kind == TokKind::minus) {
                lex_.next();
                neg = true;
            }
            Token g = expect(TokKind::number, "exponent");
            Rational r = fold_fraction(g.value);
            param = neg ? -r.to_double() : r.to_double();
        }
        expect(TokKind::rparen, "')'");
        return Expr::call(it->second, std::move(arg), param);
    }

    Token expect(TokKind kind, const std::string& what) {
        Token t = lex_.next();
        if (t.kind != kind) throw SyntaxError(t.pos, "expected " + what);
        return t;
    }

    Lexer lex_;
};

} // namespace

ExprPtr parse_expression(std::string_view source) { return Parser(source).parse(); }

bool uses_variable(const ExprPtr& e, int var) {
    if (!e) return false;
    if (e->kind == Expr::Kind::variable) return e->var == var;
    return uses_variable(e->lhs, var) || uses_variable(e->rhs, var);
}

namespace {

// Lowering over any commutative ring with the needed entry points.
template <typename Ring, typename NumberFn, typename VarFn>
Ring lower(const ExprPtr& e, NumberFn&& number, VarFn&& variable) {
    switch (e->kind) {
    case Expr::Kind::number:
        return number(e->value);
    case Expr::Kind::variable:
        return variable(e->var);
    case Expr::Kind::negate:
        return Ring{} - lower<Ring>(e->lhs, number, variable);
    case Expr::Kind::add:
        return lower<Ring>(e->lhs, number, variable) + lower<Ring>(e->rhs, number, variable);
    case Expr::Kind::subtract:
        return lower<Ring>(e->lhs, number, variable) - lower<Ring>(e->rhs, number, variable);
    case Expr::Kind::multiply:
        return lower<Ring>(e->lhs, number, variable) * lower<Ring>(e->rhs, number, variable);
    case Expr::Kind::int_pow: {
        if (e->exponent < 0) throw NonPolynomial("negative exponent");
        Ring acc = number(Rational(1));
        Ring base = lower<Ring>(e->lhs, number, variable);
        for (long i = 0; i < e->exponent; ++i) acc = acc * base;
        return acc;
    }
    case Expr::Kind::call:
        throw NonPolynomial("built-in functions have no polynomial lowering");
    }
    throw NonPolynomial("unreachable");
}

} // namespace

Polynomial to_polynomial(const ExprPtr& e) {
    return lower<Polynomial>(
        e, [](const Rational& v) { return Polynomial::constant(v); },
        [](int var) {
            if (var != kVarX) throw NonPolynomial("only the variable x is allowed here");
            return Polynomial::variable();
        });
}

bool is_polynomial(const ExprPtr& e) {
    switch (e->kind) {
    case Expr::Kind::number:
        return true;
    case Expr::Kind::variable:
        return e->var == kVarX;
    case Expr::Kind::negate:
        return is_polynomial(e->lhs);
    case Expr::Kind::add:
    case Expr::Kind::subtract:
    case Expr::Kind::multiply:
        return is_polynomial(e->lhs) && is_polynomial(e->rhs);
    case Expr::Kind::int_pow:
        return e->exponent >= 0 && is_polynomial(e->lhs);
    case Expr::Kind::call:
        return false;
    }
    return false;
}

BivariatePolynomial to_bivariate(const ExprPtr& e) {
    return lower<BivariatePolynomial>(
        e, [](const Rational& v) { return BivariatePolynomial::constant(v); },
        [](int var) {
            if (var == kVarX) return BivariatePolynomial::in_x(Polynomial::variable());
            if (var == kVarA) return BivariatePolynomial::in_a(Polynomial::variable());
            throw NonPolynomial("only the variables x and a are allowed here");
        });
}

ExprPtr differentiate(const ExprPtr& e, int var) {
    using K = Expr::Kind;
    switch (e->kind) {
    case K::number:
        return Expr::number(Rational(0));
    case K::variable:
        return Expr::number(Rational(e->var == var ? 1 : 0));
    case K::negate:
        return Expr::negate(differentiate(e->lhs, var));
    case K::add:
        return Expr::add(differentiate(e->lhs, var), differentiate(e->rhs, var));
    case K::subtract:
        return Expr::subtract(differentiate(e->lhs, var), differentiate(e->rhs, var));
    case K::multiply:
        return Expr::add(Expr::multiply(differentiate(e->lhs, var), e->rhs),
                         Expr::multiply(e->lhs, differentiate(e->rhs, var)));
    case K::int_pow: {
        if (e->exponent == 0) return Expr::number(Rational(0));
        // n * base^(n-1) * base'
        ExprPtr inner = Expr::multiply(Expr::number(Rational(e->exponent)),
                                       Expr::int_pow(e->lhs, e->exponent - 1));
        return Expr::multiply(std::move(inner), differentiate(e->lhs, var));
    }
    case K::call: {
        ExprPtr darg = differentiate(e->lhs, var);
        ExprPtr outer;
        switch (e->fn) {
        case Builtin::sqrt_fn:
            // 1 / (2 sqrt(u)) = (1/2) u^(-1/2)
            outer = Expr::multiply(Expr::number(Rational(1, 2)),
                                   Expr::call(Builtin::pow_fn, e->lhs, -0.5));
            break;
        case Builtin::abs_fn:
            outer = Expr::call(Builtin::sign_fn, e->lhs);
            break;
        case Builtin::sin_fn:
            outer = Expr::call(Builtin::cos_fn, e->lhs);
            break;
        case Builtin::cos_fn:
            outer = Expr::negate(Expr::call(Builtin::sin_fn, e->lhs));
            break;
        case Builtin::exp_fn:
            outer = Expr::call(Builtin::exp_fn, e->lhs);
            break;
        case Builtin::sign_fn:
            outer = Expr::number(Rational(0));
            break;
        case Builtin::pow_fn:
            outer = Expr::multiply(Expr::number(Rational::from_double(e->param)),
                                   Expr::call(Builtin::pow_fn, e->lhs, e->param - 1.0));
            break;
        }
        return Expr::multiply(std::move(outer), std::move(darg));
    }
    }
    throw Error("unreachable expression kind");
}

double eval_expr(const ExprPtr& e, double x, double y) {
    using K = Expr::Kind;
    switch (e->kind) {
    case K::number:
        return e->value.to_double();
    case K::variable:
        if (e->var == kVarX) return x;
        if (e->var == kVarY) return y;
        throw Error("the variable 'a' cannot be evaluated numerically");
    case K::negate:
        return -eval_expr(e->lhs, x, y);
    case K::add:
        return eval_expr(e->lhs, x, y) + eval_expr(e->rhs, x, y);
    case K::subtract:
        return eval_expr(e->lhs, x, y) - eval_expr(e->rhs, x, y);
    case K::multiply:
        return eval_expr(e->lhs, x, y) * eval_expr(e->rhs, x, y);
    case K::int_pow:
        return std::pow(eval_expr(e->lhs, x, y), static_cast<double>(e->exponent));
    case K::call: {
        double v = eval_expr(e->lhs, x, y);
        switch (e->fn) {
        case Builtin::sqrt_fn:
            if (v < 0) throw EvaluationFailure("sqrt undefined for x < 0");
            return std::sqrt(v);
        case Builtin::abs_fn:
            return std::fabs(v);
        case Builtin::sin_fn:
            return std::sin(v);
        case Builtin::cos_fn:
            return std::cos(v);
        case Builtin::exp_fn:
            return std::exp(v);
        case Builtin::sign_fn:
            return v > 0 ? 1.0 : v < 0 ? -1.0 : 0.0;
        case Builtin::pow_fn:
            if (v < 0) throw EvaluationFailure("pow undefined for x < 0");
            return std::pow(v, e->param);
        }
        throw Error("unreachable builtin");
    }
    }
    throw Error("unreachable expression kind");
}

NumericFunction to_numeric_function(const ExprPtr& e) {
    if (uses_variable(e, kVarY) || uses_variable(e, kVarA))
        throw Error("expected a function of x only");
    std::string label = to_string(e);
    if (is_polynomial(e)) return NumericFunction::from_polynomial(to_polynomial(e), label);
    ExprPtr d = differentiate(e, kVarX);
    return NumericFunction(
        label, [e](double x) { return eval_expr(e, x); },
        [d](double x) { return eval_expr(d, x); });
}

VectorFunction2 to_vector_function(const ExprPtr& e) {
    if (uses_variable(e, kVarA)) throw Error("expected a function of x and y");
    ExprPtr dx = differentiate(e, kVarX);
    ExprPtr dy = differentiate(e, kVarY);
    ExprPtr dxy = differentiate(dx, kVarY);
    ExprPtr dyx = differentiate(dy, kVarX);
    return VectorFunction2(
        [e](double x, double y) { return eval_expr(e, x, y); },
        [dx, dy](double x, double y) {
            return Vec2{eval_expr(dx, x, y), eval_expr(dy, x, y)};
        },
        [dxy](double x, double y) { return eval_expr(dxy, x, y); },
        [dyx](double x, double y) { return eval_expr(dyx, x, y); });
}

namespace {

// Printing precedence: additive 1, multiplicative 2, unary minus 3, power
// 4, atoms 5.
int precedence(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
    case K::add:
    case K::subtract:
        return 1;
    case K::multiply:
        return 2;
    case K::negate:
        return 3;
    case K::int_pow:
        return 4;
    default:
        return 5;
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_expr(const ExprPtr& e, std::string& out);

void print_child(const ExprPtr& child, int min_prec, std::string& out) {
    bool parens = precedence(*child) < min_prec;
    if (parens) out += '(';
    print_expr(child, out);
    if (parens) out += ')';
}

void print_expr(const ExprPtr& e, std::string& out) {
    using K = Expr::Kind;
    switch (e->kind) {
    case K::number:
        out += e->value.str();
        return;
    case K::variable:
        out += e->var == kVarX ? "x" : e->var == kVarY ? "y" : "a";
        return;
    case K::negate:
        out += '-';
        print_child(e->lhs, 3, out);
        return;
    case K::add:
        print_child(e->lhs, 1, out);
        out += " + ";
        print_child(e->rhs, 2, out);
        return;
    case K::subtract:
        print_child(e->lhs, 1, out);
        out += " - ";
        print_child(e->rhs, 2, out);
        return;
    case K::multiply:
        print_child(e->lhs, 2, out);
        out += '*';
        print_child(e->rhs, 3, out);
        return;
    case K::int_pow: {
        // the grammar only attaches '^' to an atom
        const Expr& b = *e->lhs;
        bool atom = b.kind == K::variable || b.kind == K::call ||
                    (b.kind == K::number && b.value.is_integer() && b.value.sign() >= 0);
        if (!atom) out += '(';
        print_expr(e->lhs, out);
        if (!atom) out += ')';
        out += '^';
        out += std::to_string(e->exponent);
        return;
    }
    case K::call: {
        switch (e->fn) {
        case Builtin::sqrt_fn: out += "sqrt("; break;
        case Builtin::abs_fn: out += "abs("; break;
        case Builtin::sin_fn: out += "sin("; break;
        case Builtin::cos_fn: out += "cos("; break;
        case Builtin::exp_fn: out += "exp("; break;
        case Builtin::sign_fn: out += "sign("; break;
        case Builtin::pow_fn: out += "pow("; break;
        }
        print_expr(e->lhs, out);
        if (e->fn == Builtin::pow_fn) {
            out += ',';
            out += fmt_double(e->param);
        }
        out += ')';
        return;
    }
    }
}

// Shared term printer for the polynomial formats: sign, coefficient, and a
// monomial body such as "x^3" or "x^2*a".
void append_term(std::string& out, const Rational& coeff, const std::string& body) {
    bool first = out.empty();
    bool neg = coeff.sign() < 0;
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    Rational ac = coeff.abs();
    if (body.empty()) {
        out += ac.str();
        return;
    }
    if (ac != Rational(1)) {
        out += ac.str();
        out += '*';
    }
    out += body;
}

std::string power_body(const char* var, int k) {
    if (k == 0) return "";
    std::string s = var;
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

} // namespace

std::string to_string(const ExprPtr& e) {
    std::string out;
    print_expr(e, out);
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i).is_zero()) continue;
        append_term(out, p.coeff(i), power_body("x", i));
    }
    return out;
}

std::string to_string(const BivariatePolynomial& b) {
    if (b.is_zero()) return "0";
    std::string out;
    for (int i = b.x_degree(); i >= 0; --i) {
        const Polynomial& row = b.row(i);
        for (int j = 0; j <= row.degree(); ++j) {
            if (row.coeff(j).is_zero()) continue;
            std::string body = power_body("x", i);
            std::string abody = power_body("a", j);
            if (!body.empty() && !abody.empty()) body += "*";
            body += abody;
            append_term(out, row.coeff(j), body);
        }
    }
    return out;
}

} // namespace limitless

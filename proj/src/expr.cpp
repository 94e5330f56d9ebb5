#include "harmonia/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace harmonia {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool is_const(const ExprPtr& e) { return e->kind == ExprKind::Constant; }

bool is_const(const ExprPtr& e, double v) {
    return e->kind == ExprKind::Constant && e->value == v;
}

// Integer test used by the pow domain rule: exact and representable.
bool is_integral(double v) {
    return std::isfinite(v) && v == std::rint(v) && std::fabs(v) <= 0x1p53;
}

} // namespace

EvalError::EvalError(std::string subexpr, double at, const std::string& what)
    : std::runtime_error(what + " in '" + subexpr + "' at x = " + fmt_double(at)),
      subexpr_(std::move(subexpr)),
      at_(at) {}

ExprPtr constant(double v) { return std::make_shared<Expr>(ExprKind::Constant, v); }

ExprPtr variable() { return std::make_shared<Expr>(ExprKind::Variable, nullptr); }

ExprPtr node(ExprKind k, ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(k, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        skip_ws();
        if (pos_ >= src_.size())
            throw ParseError(pos_, "empty expression");
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ < src_.size())
            throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
        return e;
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c))
            throw ParseError(pos_, std::string("expected '") + c + "' " + what);
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (accept('+'))
                e = node(ExprKind::Add, e, parse_term());
            else if (accept('-'))
                e = node(ExprKind::Sub, e, parse_term());
            else
                return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (accept('*'))
                e = node(ExprKind::Mul, e, parse_factor());
            else if (accept('/'))
                e = node(ExprKind::Div, e, parse_factor());
            else
                return e;
        }
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_unary();
        if (accept('^'))
            return node(ExprKind::Pow, base, parse_factor());
        return base;
    }

    ExprPtr parse_unary() {
        if (accept('-'))
            return node(ExprKind::Neg, parse_unary());
        return parse_atom();
    }

    ExprPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            expect(')', "to close '('");
            return e;
        }
        if ((c >= '0' && c <= '9') || c == '.')
            return parse_number();
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_')
            return parse_identifier();
        if (c == '\0')
            throw ParseError(pos_, "unexpected end of input");
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    ExprPtr parse_number() {
        const char* begin = src_.data() + pos_;
        const char* end = src_.data() + src_.size();
        double v = 0;
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec == std::errc::result_out_of_range)
            throw ParseError(pos_, "numeric literal out of range");
        if (ec != std::errc() || ptr == begin)
            throw ParseError(pos_, "malformed number");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return constant(v);
    }

    ExprPtr parse_identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            bool word = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_';
            if (!word)
                break;
            ++pos_;
        }
        std::string_view name = src_.substr(start, pos_ - start);
        if (name == "x")
            return variable();
        ExprKind k;
        if (name == "ln")
            k = ExprKind::Ln;
        else if (name == "exp")
            k = ExprKind::Exp;
        else if (name == "abs")
            k = ExprKind::Abs;
        else
            throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
        expect('(', ("after '" + std::string(name) + "'").c_str());
        ExprPtr arg = parse_expr();
        expect(')', "to close function argument");
        return node(k, arg);
    }
};

} // namespace

ExprPtr parse_expression(std::string_view source) { return Parser(source).run(); }

// ---------------------------------------------------------------------------
// Evaluation.

namespace {

[[noreturn]] void eval_fail(const Expr& e, double x, const std::string& what) {
    std::string s = to_string(e);
    if (s.size() > 64)
        s = s.substr(0, 61) + "...";
    throw EvalError(std::move(s), x, what);
}

double checked(const Expr& e, double x, double v) {
    if (!std::isfinite(v))
        eval_fail(e, x, "non-finite result");
    return v;
}

} // namespace

double eval(const Expr& e, double x) {
    switch (e.kind) {
    case ExprKind::Constant:
        return e.value;
    case ExprKind::Variable:
        return x;
    case ExprKind::Neg:
        return -eval(*e.lhs, x);
    case ExprKind::Ln: {
        double u = eval(*e.lhs, x);
        if (u <= 0.0)
            eval_fail(e, x, "ln of non-positive argument");
        return checked(e, x, std::log(u));
    }
    case ExprKind::Exp:
        return checked(e, x, std::exp(eval(*e.lhs, x)));
    case ExprKind::Abs:
        return std::fabs(eval(*e.lhs, x));
    case ExprKind::Add:
        return checked(e, x, eval(*e.lhs, x) + eval(*e.rhs, x));
    case ExprKind::Sub:
        return checked(e, x, eval(*e.lhs, x) - eval(*e.rhs, x));
    case ExprKind::Mul:
        return checked(e, x, eval(*e.lhs, x) * eval(*e.rhs, x));
    case ExprKind::Div: {
        double den = eval(*e.rhs, x);
        if (den == 0.0)
            eval_fail(e, x, "division by zero");
        return checked(e, x, eval(*e.lhs, x) / den);
    }
    case ExprKind::Pow: {
        double base = eval(*e.lhs, x);
        double ex = eval(*e.rhs, x);
        if (base > 0.0)
            return checked(e, x, std::pow(base, ex));
        if (base == 0.0) {
            if (ex > 0.0)
                return 0.0;
            if (ex == 0.0)
                return 1.0;
            eval_fail(e, x, "zero base with negative exponent");
        }
        if (!is_integral(ex))
            eval_fail(e, x, "negative base with non-integer exponent");
        return checked(e, x, std::pow(base, ex));
    }
    }
    eval_fail(e, x, "corrupt expression node");
}

// ---------------------------------------------------------------------------
// Simplifying constructors: constant folding plus the identity eliminations
// 0+e, e+0, e-0, 0-e, 1*e, e*1, 0*e, e*0, 0/e, e/1, e^1, e^0, -(-e).
// Constant subtrees are folded only when evaluation is total (e.g. ln of a
// positive constant), so folding never manufactures a value where the
// original tree would have raised a domain error.

namespace {

ExprPtr s_neg(ExprPtr a) {
    if (is_const(a))
        return constant(-a->value);
    if (a->kind == ExprKind::Neg)
        return a->lhs;
    return node(ExprKind::Neg, std::move(a));
}

ExprPtr s_add(ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b))
        return constant(a->value + b->value);
    if (is_const(a, 0.0))
        return b;
    if (is_const(b, 0.0))
        return a;
    return node(ExprKind::Add, std::move(a), std::move(b));
}

ExprPtr s_sub(ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b))
        return constant(a->value - b->value);
    if (is_const(b, 0.0))
        return a;
    if (is_const(a, 0.0))
        return s_neg(std::move(b));
    return node(ExprKind::Sub, std::move(a), std::move(b));
}

ExprPtr s_mul(ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b))
        return constant(a->value * b->value);
    if (is_const(a, 0.0) || is_const(b, 0.0))
        return constant(0.0);
    if (is_const(a, 1.0))
        return b;
    if (is_const(b, 1.0))
        return a;
    return node(ExprKind::Mul, std::move(a), std::move(b));
}

ExprPtr s_div(ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b) && b->value != 0.0)
        return constant(a->value / b->value);
    if (is_const(a, 0.0) && !is_const(b, 0.0))
        return constant(0.0);
    if (is_const(b, 1.0))
        return a;
    return node(ExprKind::Div, std::move(a), std::move(b));
}

ExprPtr s_pow(ExprPtr a, ExprPtr b) {
    if (is_const(a) && is_const(b)) {
        double base = a->value, ex = b->value;
        if (base > 0.0 || (base == 0.0 && ex >= 0.0) || (base < 0.0 && is_integral(ex))) {
            double v = (base == 0.0 && ex == 0.0) ? 1.0 : std::pow(base, ex);
            if (std::isfinite(v))
                return constant(v);
        }
        return node(ExprKind::Pow, std::move(a), std::move(b));
    }
    if (is_const(b, 1.0))
        return a;
    if (is_const(b, 0.0))
        return constant(1.0);
    return node(ExprKind::Pow, std::move(a), std::move(b));
}

ExprPtr s_ln(ExprPtr a) {
    if (is_const(a) && a->value > 0.0)
        return constant(std::log(a->value));
    return node(ExprKind::Ln, std::move(a));
}

ExprPtr s_exp(ExprPtr a) {
    if (is_const(a)) {
        double v = std::exp(a->value);
        if (std::isfinite(v))
            return constant(v);
    }
    return node(ExprKind::Exp, std::move(a));
}

ExprPtr s_abs(ExprPtr a) {
    if (is_const(a))
        return constant(std::fabs(a->value));
    return node(ExprKind::Abs, std::move(a));
}

} // namespace

ExprPtr fold(const ExprPtr& e) {
    switch (e->kind) {
    case ExprKind::Constant:
    case ExprKind::Variable:
        return e;
    case ExprKind::Neg:
        return s_neg(fold(e->lhs));
    case ExprKind::Ln:
        return s_ln(fold(e->lhs));
    case ExprKind::Exp:
        return s_exp(fold(e->lhs));
    case ExprKind::Abs:
        return s_abs(fold(e->lhs));
    case ExprKind::Add:
        return s_add(fold(e->lhs), fold(e->rhs));
    case ExprKind::Sub:
        return s_sub(fold(e->lhs), fold(e->rhs));
    case ExprKind::Mul:
        return s_mul(fold(e->lhs), fold(e->rhs));
    case ExprKind::Div:
        return s_div(fold(e->lhs), fold(e->rhs));
    case ExprKind::Pow:
        return s_pow(fold(e->lhs), fold(e->rhs));
    }
    return e;
}

// ---------------------------------------------------------------------------
// Symbolic differentiation. Shares subtrees of the input freely (nodes are
// immutable), e.g. d exp(u) reuses the exp(u) node itself.

ExprPtr differentiate(const ExprPtr& e) {
    switch (e->kind) {
    case ExprKind::Constant:
        return constant(0.0);
    case ExprKind::Variable:
        return constant(1.0);
    case ExprKind::Neg:
        return s_neg(differentiate(e->lhs));
    case ExprKind::Ln:
        return s_div(differentiate(e->lhs), e->lhs);
    case ExprKind::Exp:
        return s_mul(e, differentiate(e->lhs));
    case ExprKind::Abs:
        // d|u| = (u/|u|) u'; undefined at u = 0, where evaluation reports
        // the division by zero.
        return s_mul(s_div(e->lhs, e), differentiate(e->lhs));
    case ExprKind::Add:
        return s_add(differentiate(e->lhs), differentiate(e->rhs));
    case ExprKind::Sub:
        return s_sub(differentiate(e->lhs), differentiate(e->rhs));
    case ExprKind::Mul:
        return s_add(s_mul(differentiate(e->lhs), e->rhs),
                     s_mul(e->lhs, differentiate(e->rhs)));
    case ExprKind::Div:
        return s_div(s_sub(s_mul(differentiate(e->lhs), e->rhs),
                           s_mul(e->lhs, differentiate(e->rhs))),
                     s_pow(e->rhs, constant(2.0)));
    case ExprKind::Pow: {
        const ExprPtr& u = e->lhs;
        const ExprPtr& v = e->rhs;
        if (is_const(v)) {
            double c = v->value;
            return s_mul(s_mul(constant(c), s_pow(u, constant(c - 1.0))),
                         differentiate(u));
        }
        if (is_const(u))
            return s_mul(e, s_mul(s_ln(u), differentiate(v)));
        // General case: (u^v)' = u^v (v' ln u + v u' / u).
        return s_mul(e, s_add(s_mul(differentiate(v), s_ln(u)),
                              s_div(s_mul(v, differentiate(u)), u)));
    }
    }
    return constant(0.0);
}

// ---------------------------------------------------------------------------
// Printer. Emits the minimal parenthesization that reparses to the same
// tree shape, modulo the stable rewrites noted in the header (a leading
// negative constant reparses as negation of a positive one).

namespace {

bool is_binary(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Pow:
        return true;
    default:
        return false;
    }
}

int precedence(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
        return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
        return 2;
    case ExprKind::Pow:
        return 3;
    default:
        return 4;
    }
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& c, std::string& out, bool parens) {
    if (parens) {
        out += '(';
        print(c, out);
        out += ')';
    } else {
        print(c, out);
    }
}

void print(const Expr& e, std::string& out) {
    switch (e.kind) {
    case ExprKind::Constant:
        if (e.value < 0.0 || std::signbit(e.value)) {
            out += "(-" + fmt_double(-e.value) + ")";
        } else {
            out += fmt_double(e.value);
        }
        return;
    case ExprKind::Variable:
        out += 'x';
        return;
    case ExprKind::Neg:
        out += '-';
        print_child(*e.lhs, out, is_binary(*e.lhs));
        return;
    case ExprKind::Ln:
    case ExprKind::Exp:
    case ExprKind::Abs:
        out += e.kind == ExprKind::Ln ? "ln" : e.kind == ExprKind::Exp ? "exp" : "abs";
        out += '(';
        print(*e.lhs, out);
        out += ')';
        return;
    case ExprKind::Add:
        print_child(*e.lhs, out, precedence(*e.lhs) < 1);
        out += '+';
        print_child(*e.rhs, out, precedence(*e.rhs) <= 1);
        return;
    case ExprKind::Sub:
        print_child(*e.lhs, out, precedence(*e.lhs) < 1);
        out += '-';
        print_child(*e.rhs, out, precedence(*e.rhs) <= 1);
        return;
    case ExprKind::Mul:
        print_child(*e.lhs, out, precedence(*e.lhs) < 2);
        out += '*';
        print_child(*e.rhs, out, precedence(*e.rhs) <= 2);
        return;
    case ExprKind::Div:
        print_child(*e.lhs, out, precedence(*e.lhs) < 2);
        out += '/';
        print_child(*e.rhs, out, precedence(*e.rhs) <= 2);
        return;
    case ExprKind::Pow:
        // '^' is right-associative and binds tighter than unary minus on
        // the right of the operator but not on the left: -x^2 parses as
        // (-x)^2, and x^-2 parses as x^(-2).
        print_child(*e.lhs, out, is_binary(*e.lhs));
        out += '^';
        print_child(*e.rhs, out,
                    is_binary(*e.rhs) && e.rhs->kind != ExprKind::Pow);
        return;
    }
}

} // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print(e, out);
    return out;
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case ExprKind::Constant:
        return a.value == b.value;
    case ExprKind::Variable:
        return true;
    default:
        if (!equal(*a.lhs, *b.lhs))
            return false;
        if (a.rhs == nullptr)
            return b.rhs == nullptr;
        return b.rhs != nullptr && equal(*a.rhs, *b.rhs);
    }
}

FunctionSpec parse(std::string_view source) {
    ExprPtr body = parse_expression(source);
    ExprPtr deriv = differentiate(body);
    return FunctionSpec{std::string(source), std::move(body), std::move(deriv)};
}

FunctionSpec make_function_spec(ExprPtr body, std::string source) {
    if (source.empty())
        source = to_string(*body);
    ExprPtr deriv = differentiate(body);
    return FunctionSpec{std::move(source), std::move(body), std::move(deriv)};
}

} // namespace harmonia

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonia {

/// Node kinds of the expression tree. Unary operators store their operand
/// in `lhs`; `Constant` uses `value`; `Variable` is the single variable x.
enum class ExprKind {
    Constant,
    Variable,
    Neg,
    Ln,
    Exp,
    Abs,
    Add,
    Sub,
    Mul,
    Div,
    Pow
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Trees are shared freely across threads;
/// all traversals are const.
struct Expr {
    ExprKind kind;
    double value = 0.0;
    ExprPtr lhs;
    ExprPtr rhs;

    Expr(ExprKind k, double v) : kind(k), value(v) {}
    Expr(ExprKind k, ExprPtr a, ExprPtr b = nullptr)
        : kind(k), lhs(std::move(a)), rhs(std::move(b)) {}
};

/// Syntax error in a source expression. `offset` is the byte offset of the
/// offending character in the input.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Domain violation (or non-finite result) during evaluation. Carries the
/// printed subexpression that failed and the evaluation point.
class EvalError : public std::runtime_error {
  public:
    EvalError(std::string subexpr, double at, const std::string& what);
    const std::string& subexpr() const { return subexpr_; }
    double at() const { return at_; }

  private:
    std::string subexpr_;
    double at_;
};

// Raw node constructors. No simplification.
ExprPtr constant(double v);
ExprPtr variable();
ExprPtr node(ExprKind k, ExprPtr a, ExprPtr b = nullptr);

/// Parse `source` against the grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' factor)?          -- '^' is right-associative
///   unary  := '-' unary | atom
///   atom   := number | 'x' | func '(' expr ')' | '(' expr ')'
///   func   := 'ln' | 'exp' | 'abs'
///
/// into a raw AST. Throws ParseError on empty input, unknown identifiers,
/// and malformed syntax.
ExprPtr parse_expression(std::string_view source);

/// Evaluate at x. Domain checks: ln needs a positive argument, division a
/// nonzero denominator, a fractional exponent a positive base. A negative
/// base is allowed when the exponent is an integer. Non-finite intermediate
/// results are reported as errors.
double eval(const Expr& e, double x);

/// Symbolic derivative with respect to x. The result is simplified by
/// constant folding and identity elimination only (0+e, 1*e, e^1, e^0, 0*e).
ExprPtr differentiate(const ExprPtr& e);

/// Rebuild `e` applying the same constant folding / identity elimination
/// used by differentiate(). Never changes values on the domain of `e`.
ExprPtr fold(const ExprPtr& e);

/// Render to text that parses back to a structurally stable tree:
/// parse(print(t)) is a fixed point of print-then-parse.
std::string to_string(const Expr& e);

/// Structural equality (kind, constant values, children).
bool equal(const Expr& a, const Expr& b);

/// A parsed function together with its symbolic derivative. Immutable;
/// safe to share and evaluate concurrently.
struct FunctionSpec {
    std::string source;
    ExprPtr body;
    ExprPtr derivative;

    double value_at(double x) const { return eval(*body, x); }
    double derivative_at(double x) const { return eval(*derivative, x); }
};

/// Parse a source expression and attach its symbolic derivative.
FunctionSpec parse(std::string_view source);

/// Wrap an already-built body; the derivative is derived symbolically.
/// `source` defaults to the printed form of `body`.
FunctionSpec make_function_spec(ExprPtr body, std::string source = "");

} // namespace harmonia

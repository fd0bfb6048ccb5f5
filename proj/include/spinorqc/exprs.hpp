#pragma once

#include "spinorqc/format.hpp"
#include "spinorqc/tensor.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spinorqc {

// Expression language over the kernel. Precedence, loosest first:
//   + -  <  ox  <  *  <  ^ (non-negative integer exponent)
// Atoms: rational literals p/q (no spaces), rt2, g0..g3, I, P, B1, B2,
// Phi+/Phi-/Psi+/Psi-, G1..G3, Ge, PM, and the calls H(a,b,c), rev(x),
// inv(x), grade(x,k), exp(k,x), tensor(x,...), N(x), ip(x,y), ipraw(x,y),
// star(x). Decimal literals are accepted only in float mode.

struct ParseError : std::runtime_error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t off, const std::string& msg, std::string exp)
        : std::runtime_error(msg), offset(off), expected(std::move(exp)) {}
};

struct EvalError : std::runtime_error {
    std::size_t offset;
    EvalError(std::size_t off, const std::string& msg) : std::runtime_error(msg), offset(off) {}
};

enum class ExprKind {
    number,       // literal text
    rt2,
    atom,         // builtin constant, name in text
    name,         // session binding reference
    neg,
    add,
    sub,
    mul,
    tensor_prod,  // infix ox
    power,        // exponent in k
    rev,
    ginv,         // grade involution
    grade,        // grade index in k
    expq,         // quarter-pi count in k
    tensor_call,
    norm,
    ip,
    ipraw,
    star_op,
    hamiltonian,  // H(a, b, c)
};

struct Expr {
    ExprKind kind;
    std::size_t offset = 0;
    std::string text;
    long k = 0;
    std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(std::string_view text);

// REPL line: `let <name> = <expr>` or a bare expression.
struct Statement {
    std::string bind_name;  // empty for a bare expression
    ExprPtr expr;
};
Statement parse_statement(std::string_view text);

// A value is a bare coefficient, a one-slot multivector, or an n-slot tensor;
// binary operators promote upward as needed.
template <class T>
struct BasicValue {
    std::variant<T, Multivector<T>, TensorMultivector<T>> v;
};
using Value = BasicValue<Scalar>;
using FloatValue = BasicValue<double>;

Value eval_exact(const ExprPtr& e, const std::map<std::string, Value>& env = {});
FloatValue eval_float(const ExprPtr& e, const std::map<std::string, FloatValue>& env = {});

std::string value_text(const Value& v);
std::string value_text(const FloatValue& v);

}  // namespace spinorqc

#include "spinorqc/exprs.hpp"

#include "spinorqc/braid.hpp"
#include "spinorqc/majorana.hpp"
#include "spinorqc/spinor.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <type_traits>

namespace spinorqc {

namespace {

struct Token {
    enum class Type {
        number,
        ident,
        plus,
        minus,
        times,
        caret,
        lparen,
        rparen,
        comma,
        ox,
        let_kw,
        assign,
        end
    };
    Type type;
    std::string text;
    std::size_t offset = 0;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    const auto is_ident_start = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < s.size() && is_digit(s[i])) ++i;
            bool decimal = false;
            if (i < s.size() && s[i] == '.') {
                decimal = true;
                ++i;
                while (i < s.size() && is_digit(s[i])) ++i;
            }
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
                if (j < s.size() && is_digit(s[j])) {
                    decimal = true;
                    i = j;
                    while (i < s.size() && is_digit(s[i])) ++i;
                }
            }
            // "p/q" is one token only when the slash touches digits on both sides
            if (!decimal && i < s.size() && s[i] == '/' && i + 1 < s.size() && is_digit(s[i + 1])) {
                ++i;
                while (i < s.size() && is_digit(s[i])) ++i;
            }
            out.push_back({Token::Type::number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < s.size() && (is_ident_start(s[i]) || is_digit(s[i]))) ++i;
            std::string word(s.substr(start, i - start));
            if ((word == "Phi" || word == "Psi") && i < s.size() && (s[i] == '+' || s[i] == '-')) {
                word.push_back(s[i]);
                ++i;
            }
            if (word == "ox")
                out.push_back({Token::Type::ox, word, start});
            else if (word == "let")
                out.push_back({Token::Type::let_kw, word, start});
            else
                out.push_back({Token::Type::ident, word, start});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Type::plus, "+", start}); break;
            case '-': out.push_back({Token::Type::minus, "-", start}); break;
            case '*': out.push_back({Token::Type::times, "*", start}); break;
            case '^': out.push_back({Token::Type::caret, "^", start}); break;
            case '(': out.push_back({Token::Type::lparen, "(", start}); break;
            case ')': out.push_back({Token::Type::rparen, ")", start}); break;
            case ',': out.push_back({Token::Type::comma, ",", start}); break;
            case '=': out.push_back({Token::Type::assign, "=", start}); break;
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'",
                                 "a number, a name, an operator, '(', ')', or ','");
        }
        ++i;
    }
    out.push_back({Token::Type::end, "", s.size()});
    return out;
}

bool is_constant_name(const std::string& n) {
    static const std::set<std::string> names{"g0",   "g1",   "g2",   "g3",   "I",  "P",
                                             "B1",   "B2",   "Phi+", "Phi-", "Psi+", "Psi-",
                                             "G1",   "G2",   "G3",   "Ge",   "PM"};
    return names.count(n) > 0;
}

bool is_function_name(const std::string& n) {
    static const std::set<std::string> names{"H",  "rev", "inv",   "grade", "exp",
                                             "tensor", "N", "ip", "ipraw", "star"};
    return names.count(n) > 0;
}

std::shared_ptr<Expr> make_node(ExprKind kind, std::size_t offset) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->offset = offset;
    return e;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    [[noreturn]] void fail(const Token& t, const std::string& expected) const {
        const std::string got =
            t.type == Token::Type::end ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.offset, "unexpected " + got, expected);
    }
    void expect(Token::Type ty, const char* what) {
        if (peek().type != ty) fail(peek(), what);
        ++pos;
    }

    long integer_arg(const char* what, bool allow_negative) {
        bool neg = false;
        if (allow_negative && peek().type == Token::Type::minus) {
            neg = true;
            ++pos;
        }
        if (peek().type != Token::Type::number) fail(peek(), what);
        const Token t = take();
        if (t.text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(t.offset, "'" + t.text + "' is not an integer", what);
        const long v = std::strtol(t.text.c_str(), nullptr, 10);
        return neg ? -v : v;
    }

    ExprPtr expression() { return additive(); }

    ExprPtr additive() {
        ExprPtr lhs = unary();
        while (peek().type == Token::Type::plus || peek().type == Token::Type::minus) {
            const Token op = take();
            auto node = make_node(op.type == Token::Type::plus ? ExprKind::add : ExprKind::sub,
                                  op.offset);
            node->args = {lhs, unary()};
            lhs = node;
        }
        return lhs;
    }

    ExprPtr unary() {
        if (peek().type == Token::Type::minus) {
            const Token op = take();
            auto node = make_node(ExprKind::neg, op.offset);
            node->args = {unary()};
            return node;
        }
        return oxterm();
    }

    ExprPtr oxterm() {
        ExprPtr lhs = multerm();
        while (peek().type == Token::Type::ox) {
            const Token op = take();
            auto node = make_node(ExprKind::tensor_prod, op.offset);
            node->args = {lhs, multerm()};
            lhs = node;
        }
        return lhs;
    }

    ExprPtr multerm() {
        ExprPtr lhs = powterm();
        while (peek().type == Token::Type::times) {
            const Token op = take();
            auto node = make_node(ExprKind::mul, op.offset);
            node->args = {lhs, powterm()};
            lhs = node;
        }
        return lhs;
    }

    ExprPtr powterm() {
        ExprPtr base = atom();
        if (peek().type == Token::Type::caret) {
            const Token op = take();
            auto node = make_node(ExprKind::power, op.offset);
            node->k = integer_arg("a non-negative integer exponent", false);
            node->args = {base};
            return node;
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::number: {
                const Token tok = take();
                auto node = make_node(ExprKind::number, tok.offset);
                node->text = tok.text;
                return node;
            }
            case Token::Type::lparen: {
                take();
                ExprPtr e = expression();
                expect(Token::Type::rparen, "')'");
                return e;
            }
            case Token::Type::ident: return ident_atom();
            default: fail(t, "a literal, a name, or '('");
        }
    }

    ExprPtr ident_atom() {
        const Token t = take();
        const std::string& n = t.text;
        if (n == "rt2") return make_node(ExprKind::rt2, t.offset);
        if (is_function_name(n)) return call(n, t.offset);
        auto node = make_node(is_constant_name(n) ? ExprKind::atom : ExprKind::name, t.offset);
        node->text = n;
        return node;
    }

    ExprPtr call(const std::string& n, std::size_t offset) {
        expect(Token::Type::lparen, "'(' after a function name");
        std::shared_ptr<Expr> node;
        if (n == "rev" || n == "inv" || n == "N" || n == "star") {
            const ExprKind kind = n == "rev"   ? ExprKind::rev
                                  : n == "inv" ? ExprKind::ginv
                                  : n == "N"   ? ExprKind::norm
                                               : ExprKind::star_op;
            node = make_node(kind, offset);
            node->args = {expression()};
        } else if (n == "grade") {
            node = make_node(ExprKind::grade, offset);
            node->args = {expression()};
            expect(Token::Type::comma, "',' between the argument and the grade");
            node->k = integer_arg("a non-negative grade index", false);
        } else if (n == "exp") {
            node = make_node(ExprKind::expq, offset);
            node->k = integer_arg("an integer quarter-pi count", true);
            expect(Token::Type::comma, "',' between the angle count and the exponent");
            node->args = {expression()};
        } else if (n == "tensor") {
            node = make_node(ExprKind::tensor_call, offset);
            node->args.push_back(expression());
            while (peek().type == Token::Type::comma) {
                take();
                node->args.push_back(expression());
            }
        } else if (n == "ip" || n == "ipraw") {
            node = make_node(n == "ip" ? ExprKind::ip : ExprKind::ipraw, offset);
            node->args = {expression()};
            expect(Token::Type::comma, "',' between the two states");
            node->args.push_back(expression());
        } else {  // H
            node = make_node(ExprKind::hamiltonian, offset);
            node->args = {expression()};
            expect(Token::Type::comma, "',' between coefficients");
            node->args.push_back(expression());
            expect(Token::Type::comma, "',' between coefficients");
            node->args.push_back(expression());
        }
        expect(Token::Type::rparen, "')'");
        return node;
    }
};

}  // namespace

ExprPtr parse_expression(std::string_view text) {
    Parser p{lex(text)};
    ExprPtr e = p.expression();
    if (p.peek().type != Token::Type::end) p.fail(p.peek(), "an operator or end of input");
    return e;
}

Statement parse_statement(std::string_view text) {
    Parser p{lex(text)};
    if (p.peek().type == Token::Type::let_kw) {
        p.take();
        if (p.peek().type != Token::Type::ident) p.fail(p.peek(), "a name to bind");
        const Token name = p.take();
        if (is_constant_name(name.text) || is_function_name(name.text) || name.text == "rt2")
            throw ParseError(name.offset, "cannot bind reserved name '" + name.text + "'",
                             "an unreserved name");
        p.expect(Token::Type::assign, "'='");
        ExprPtr e = p.expression();
        if (p.peek().type != Token::Type::end) p.fail(p.peek(), "an operator or end of input");
        return {name.text, e};
    }
    ExprPtr e = p.expression();
    if (p.peek().type != Token::Type::end) p.fail(p.peek(), "an operator or end of input");
    return {"", e};
}

namespace {

template <class T>
Multivector<T> conv_single(const Multivector<Scalar>& m) {
    if constexpr (std::is_same_v<T, Scalar>)
        return m;
    else
        return to_float(m);
}

template <class T>
TensorMultivector<T> conv_tensor(const TensorMultivector<Scalar>& m) {
    if constexpr (std::is_same_v<T, Scalar>)
        return m;
    else
        return to_float(m);
}

bool atom_is_tensor(const std::string& n) {
    return n == "Phi+" || n == "Phi-" || n == "Psi+" || n == "Psi-" || n == "G1" || n == "G2" ||
           n == "G3" || n == "Ge" || n == "PM";
}

Multivector<Scalar> exact_atom_single(const std::string& n) {
    if (n == "g0") return gamma(0);
    if (n == "g1") return gamma(1);
    if (n == "g2") return gamma(2);
    if (n == "g3") return gamma(3);
    if (n == "I") return pseudoscalar();
    if (n == "P") return idempotent_p();
    if (n == "B1") return braid_b(Which::B1).value;
    return braid_b(Which::B2).value;  // B2
}

TensorMultivector<Scalar> exact_atom_tensor(const std::string& n) {
    if (n == "Phi+") return bell_state(Bell::phi_plus);
    if (n == "Phi-") return bell_state(Bell::phi_minus);
    if (n == "Psi+") return bell_state(Bell::psi_plus);
    if (n == "Psi-") return bell_state(Bell::psi_minus);
    if (n == "G1") return majorana_set().g1;
    if (n == "G2") return majorana_set().g2;
    if (n == "G3") return majorana_set().g3;
    if (n == "Ge") return emergent_majorana();
    return parity_op();  // PM
}

template <class T>
Multivector<T> as_single(const BasicValue<T>& v) {
    if (v.v.index() == 0) return Multivector<T>::scalar(std::get<0>(v.v));
    return std::get<1>(v.v);
}

// Wrap into a tensor at the value's own arity (scalars become one-slot).
template <class T>
TensorMultivector<T> lift_tensor(const BasicValue<T>& v) {
    switch (v.v.index()) {
        case 0: return TensorMultivector<T>::from_single(Multivector<T>::scalar(std::get<0>(v.v)));
        case 1: return TensorMultivector<T>::from_single(std::get<1>(v.v));
        default: return std::get<2>(v.v);
    }
}

// Promote to n slots: a scalar scales the identity; everything else keeps its
// own arity and lets the kernel report genuine slot mismatches.
template <class T>
TensorMultivector<T> widen_tensor(const BasicValue<T>& v, int slots) {
    if (v.v.index() == 0)
        return std::get<0>(v.v) * TensorMultivector<T>::identity(slots);
    return lift_tensor(v);
}

template <class T, class FS, class FM, class FT>
BasicValue<T> apply_binary(const BasicValue<T>& a, const BasicValue<T>& b, FS fs, FM fm, FT ft) {
    const std::size_t ra = a.v.index(), rb = b.v.index();
    if (ra == 0 && rb == 0) return {fs(std::get<0>(a.v), std::get<0>(b.v))};
    if (ra <= 1 && rb <= 1) return {fm(as_single(a), as_single(b))};
    const int na = ra == 2 ? std::get<2>(a.v).slots : std::get<2>(b.v).slots;
    const int nb = rb == 2 ? std::get<2>(b.v).slots : na;
    return {ft(widen_tensor(a, nb), widen_tensor(b, na))};
}

template <class T>
BasicValue<T> eval_node(const ExprPtr& e, const std::map<std::string, BasicValue<T>>& env) {
    constexpr bool exact = std::is_same_v<T, Scalar>;
    try {
        switch (e->kind) {
            case ExprKind::number: {
                const std::string& t = e->text;
                const bool decimal = t.find_first_of(".eE") != std::string::npos;
                if constexpr (exact) {
                    if (decimal)
                        throw EvalError(e->offset, "decimal literal '" + t +
                                                       "' requires float mode "
                                                       "(SPINORQC_MODE=float)");
                    return {Scalar(parse_rational(t))};
                } else {
                    if (decimal) return {std::strtod(t.c_str(), nullptr)};
                    return {to_double(parse_rational(t))};
                }
            }
            case ExprKind::rt2: {
                if constexpr (exact)
                    return {Scalar::sqrt2()};
                else
                    return {std::sqrt(2.0)};
            }
            case ExprKind::atom: {
                if (atom_is_tensor(e->text)) return {conv_tensor<T>(exact_atom_tensor(e->text))};
                return {conv_single<T>(exact_atom_single(e->text))};
            }
            case ExprKind::name: {
                const auto it = env.find(e->text);
                if (it == env.end())
                    throw EvalError(e->offset, "unknown name '" + e->text + "'");
                return it->second;
            }
            case ExprKind::neg: {
                auto a = eval_node(e->args[0], env);
                return std::visit([](const auto& x) -> BasicValue<T> { return {-x}; }, a.v);
            }
            case ExprKind::add:
            case ExprKind::sub:
            case ExprKind::mul: {
                const auto a = eval_node(e->args[0], env);
                const auto b = eval_node(e->args[1], env);
                if (e->kind == ExprKind::add)
                    return apply_binary(
                        a, b, [](const T& x, const T& y) { return x + y; },
                        [](const Multivector<T>& x, const Multivector<T>& y) { return x + y; },
                        [](const TensorMultivector<T>& x, const TensorMultivector<T>& y) {
                            return x + y;
                        });
                if (e->kind == ExprKind::sub)
                    return apply_binary(
                        a, b, [](const T& x, const T& y) { return x - y; },
                        [](const Multivector<T>& x, const Multivector<T>& y) { return x - y; },
                        [](const TensorMultivector<T>& x, const TensorMultivector<T>& y) {
                            return x - y;
                        });
                return apply_binary(
                    a, b, [](const T& x, const T& y) { return x * y; },
                    [](const Multivector<T>& x, const Multivector<T>& y) { return gp(x, y); },
                    [](const TensorMultivector<T>& x, const TensorMultivector<T>& y) {
                        return tmul(x, y);
                    });
            }
            case ExprKind::tensor_prod: {
                const auto a = eval_node(e->args[0], env);
                const auto b = eval_node(e->args[1], env);
                return {outer(lift_tensor(a), lift_tensor(b))};
            }
            case ExprKind::tensor_call: {
                auto acc = lift_tensor(eval_node(e->args[0], env));
                for (std::size_t i = 1; i < e->args.size(); ++i)
                    acc = outer(acc, lift_tensor(eval_node(e->args[i], env)));
                return {std::move(acc)};
            }
            case ExprKind::power: {
                const long n = e->k;
                if (n > 4096) throw EvalError(e->offset, "exponent too large");
                const auto base = eval_node(e->args[0], env);
                return std::visit(
                    [&](const auto& x) -> BasicValue<T> {
                        using X = std::decay_t<decltype(x)>;
                        if constexpr (std::is_same_v<X, T>) {
                            T acc = Coeff<T>::one();
                            for (long i = 0; i < n; ++i) acc = acc * x;
                            return {acc};
                        } else if constexpr (std::is_same_v<X, Multivector<T>>) {
                            auto acc = Multivector<T>::one(x.sig);
                            for (long i = 0; i < n; ++i) acc = gp(acc, x);
                            return {acc};
                        } else {
                            auto acc = TensorMultivector<T>::identity(x.slots, x.sig);
                            for (long i = 0; i < n; ++i) acc = tmul(acc, x);
                            return {acc};
                        }
                    },
                    base.v);
            }
            case ExprKind::rev:
            case ExprKind::ginv:
            case ExprKind::star_op: {
                const auto a = eval_node(e->args[0], env);
                const ExprKind kind = e->kind;
                return std::visit(
                    [&](const auto& x) -> BasicValue<T> {
                        using X = std::decay_t<decltype(x)>;
                        if constexpr (std::is_same_v<X, T>) {
                            return {x};  // all three fix coefficients
                        } else if constexpr (std::is_same_v<X, Multivector<T>>) {
                            if (kind == ExprKind::rev) return {reverse(x)};
                            if (kind == ExprKind::ginv) return {grade_involution(x)};
                            return {star(x)};
                        } else {
                            if (kind == ExprKind::rev) return {tensor_reverse(x)};
                            if (kind == ExprKind::ginv) return {tensor_grade_involution(x)};
                            return {tensor_star(x)};
                        }
                    },
                    a.v);
            }
            case ExprKind::grade: {
                const auto a = eval_node(e->args[0], env);
                const int k = static_cast<int>(e->k);
                return std::visit(
                    [&](const auto& x) -> BasicValue<T> {
                        using X = std::decay_t<decltype(x)>;
                        if constexpr (std::is_same_v<X, T>) {
                            return {k == 0 ? x : Coeff<T>::zero()};
                        } else if constexpr (std::is_same_v<X, Multivector<T>>) {
                            return {grade_project(x, k)};
                        } else {
                            TensorMultivector<T> r(x.sig, x.slots);
                            for (const auto& [key, c] : x.terms) {
                                int total = 0;
                                for (Mask m : key) total += blade_grade(m);
                                if (total == k) r.add_term(key, c);
                            }
                            return {r};
                        }
                    },
                    a.v);
            }
            case ExprKind::expq: {
                const auto a = eval_node(e->args[0], env);
                const long k = e->k;
                if constexpr (exact) {
                    if (a.v.index() == 2) return {exp_tensor(static_cast<int>(k), std::get<2>(a.v))};
                    return {exp_bivector(static_cast<int>(k), as_single(a))};
                } else {
                    const double theta = static_cast<double>(k) * std::acos(-1.0) / 4.0;
                    switch (a.v.index()) {
                        case 0: return {std::exp(theta * std::get<0>(a.v))};
                        case 1: return {exp_series(theta, std::get<1>(a.v))};
                        default: return {exp_tensor_series(theta, std::get<2>(a.v))};
                    }
                }
            }
            case ExprKind::norm: {
                const auto a = eval_node(e->args[0], env);
                return std::visit(
                    [](const auto& x) -> BasicValue<T> {
                        using X = std::decay_t<decltype(x)>;
                        if constexpr (std::is_same_v<X, T>) {
                            return {x * x};
                        } else if constexpr (std::is_same_v<X, Multivector<T>>) {
                            return {norm_squared(x)};
                        } else {
                            return {tmul(tensor_reverse(x), x).scalar_part()};
                        }
                    },
                    a.v);
            }
            case ExprKind::ip:
            case ExprKind::ipraw: {
                if constexpr (!exact) {
                    throw EvalError(e->offset, "ip requires exact mode (unset SPINORQC_MODE)");
                } else {
                    const auto a = eval_node(e->args[0], env);
                    const auto b = eval_node(e->args[1], env);
                    const bool normalized = e->kind == ExprKind::ip;
                    if (a.v.index() == 2 || b.v.index() == 2) {
                        const auto r = inner_product_state(lift_tensor(a), lift_tensor(b));
                        return {normalized ? r.normalized : r.raw};
                    }
                    const auto r = inner_product(as_single(a), as_single(b));
                    return {normalized ? r.normalized : r.raw};
                }
            }
            case ExprKind::hamiltonian: {
                T coeff[3];
                for (int i = 0; i < 3; ++i) {
                    const auto v = eval_node(e->args[static_cast<std::size_t>(i)], env);
                    if (v.v.index() != 0)
                        throw EvalError(e->args[static_cast<std::size_t>(i)]->offset,
                                        "H arguments must be scalars");
                    coeff[i] = std::get<0>(v.v);
                }
                if constexpr (exact) {
                    return {majorana_model(coeff[0], coeff[1], coeff[2]).h};
                } else {
                    const auto g = majorana_set();
                    const auto iota1 = to_float(
                        tensor_of<Scalar>({pseudoscalar(), Multivector<Scalar>::one()}));
                    return {-tmul(iota1, coeff[0] * to_float(g.g1) + coeff[1] * to_float(g.g2) +
                                             coeff[2] * to_float(g.g3))};
                }
            }
        }
        throw std::logic_error("unhandled expression node");
    } catch (const EvalError&) {
        throw;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& ex) {
        throw EvalError(e->offset, ex.what());
    }
}

}  // namespace

Value eval_exact(const ExprPtr& e, const std::map<std::string, Value>& env) {
    return eval_node<Scalar>(e, env);
}

FloatValue eval_float(const ExprPtr& e, const std::map<std::string, FloatValue>& env) {
    return eval_node<double>(e, env);
}

std::string value_text(const Value& v) {
    return std::visit([](const auto& x) { return to_string(x); }, v.v);
}

std::string value_text(const FloatValue& v) {
    return std::visit([](const auto& x) { return to_string(x); }, v.v);
}

}  // namespace spinorqc

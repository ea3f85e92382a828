#include "trilie/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace trilie {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("expression error at position " + std::to_string(pos + 1) +
                                    ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    static ExprPtr make(ParamExpr e) { return std::make_shared<const ParamExpr>(std::move(e)); }
    static ExprPtr binary(ParamExpr::Kind k, ExprPtr a, ExprPtr b) {
        ParamExpr e;
        e.kind = k;
        e.lhs = std::move(a);
        e.rhs = std::move(b);
        return make(std::move(e));
    }

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek() != '\0') fail("unexpected trailing input");
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return e;
            ++pos;
            e = binary(c == '+' ? ParamExpr::Kind::add : ParamExpr::Kind::sub, std::move(e),
                       term());
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/') return e;
            ++pos;
            e = binary(c == '*' ? ParamExpr::Kind::mul : ParamExpr::Kind::div, std::move(e),
                       factor());
        }
    }

    ExprPtr factor() {
        const char c = peek();
        if (c == '-') {
            ++pos;
            ParamExpr e;
            e.kind = ParamExpr::Kind::neg;
            e.lhs = factor();
            return make(std::move(e));
        }
        if (c == '(') {
            ++pos;
            ExprPtr e = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string digits() {
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            d += s[pos++];
        return d;
    }

    ExprPtr rational() {
        Scalar v(mpq_class(digits(), 10));
        // fold an immediate integer denominator into the literal
        const std::size_t save = pos;
        if (peek() == '/') {
            ++pos;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                const Scalar den(mpq_class(digits(), 10));
                if (den == 0) fail("zero denominator in rational literal");
                v /= den;
            } else {
                pos = save;  // a division by something non-literal
            }
        }
        ParamExpr e;
        e.kind = ParamExpr::Kind::literal;
        e.value = v;
        return make(std::move(e));
    }

    ExprPtr ident() {
        std::string name;
        while (pos < s.size()) {
            const char c = s[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                name += s[pos++];
            else
                break;
        }
        ParamExpr e;
        e.kind = ParamExpr::Kind::param;
        e.name = std::move(name);
        return make(std::move(e));
    }
};

int precedence(ParamExpr::Kind k) {
    switch (k) {
        case ParamExpr::Kind::add:
        case ParamExpr::Kind::sub: return 0;
        case ParamExpr::Kind::mul:
        case ParamExpr::Kind::div: return 1;
        case ParamExpr::Kind::neg: return 2;
        default: return 3;
    }
}

std::string wrap(const ParamExpr& e, int min_prec) {
    const std::string s = expr_to_string(e);
    if (precedence(e.kind) < min_prec) return "(" + s + ")";
    return s;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p{text};
    return p.parse();
}

Scalar eval_expr(const ParamExpr& e, const std::map<std::string, Scalar>& params) {
    switch (e.kind) {
        case ParamExpr::Kind::literal: return e.value;
        case ParamExpr::Kind::param: {
            const auto it = params.find(e.name);
            if (it == params.end())
                throw std::invalid_argument("unknown parameter '" + e.name + "'");
            return it->second;
        }
        case ParamExpr::Kind::neg: return -eval_expr(*e.lhs, params);
        case ParamExpr::Kind::add: return eval_expr(*e.lhs, params) + eval_expr(*e.rhs, params);
        case ParamExpr::Kind::sub: return eval_expr(*e.lhs, params) - eval_expr(*e.rhs, params);
        case ParamExpr::Kind::mul: return eval_expr(*e.lhs, params) * eval_expr(*e.rhs, params);
        case ParamExpr::Kind::div: {
            const Scalar d = eval_expr(*e.rhs, params);
            if (d == 0) throw std::invalid_argument("division by zero in parameter expression");
            return eval_expr(*e.lhs, params) / d;
        }
    }
    throw std::logic_error("eval_expr: bad kind");
}

std::string expr_to_string(const ParamExpr& e) {
    switch (e.kind) {
        case ParamExpr::Kind::literal: return e.value.get_str();
        case ParamExpr::Kind::param: return e.name;
        case ParamExpr::Kind::neg: return "-" + wrap(*e.lhs, 2);
        case ParamExpr::Kind::add:
            return wrap(*e.lhs, 0) + " + " + wrap(*e.rhs, 0);
        case ParamExpr::Kind::sub:
            return wrap(*e.lhs, 0) + " - " + wrap(*e.rhs, 1);
        case ParamExpr::Kind::mul:
            return wrap(*e.lhs, 1) + "*" + wrap(*e.rhs, 1);
        case ParamExpr::Kind::div:
            return wrap(*e.lhs, 1) + "/" + wrap(*e.rhs, 2);
    }
    throw std::logic_error("expr_to_string: bad kind");
}

}  // namespace trilie

#include "gfa/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace gfa {

namespace {

struct Parser {
    const std::string& src;
    int k;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    ExprPtr parse() {
        ExprPtr e = expression();
        if (!eof()) fail("unexpected trailing input");
        return e;
    }

    ExprPtr expression() {
        ExprPtr e = term();
        for (;;) {
            if (consume('+')) e = add(e, term());
            else if (consume('-')) e = sub(e, term());
            else return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (consume('*')) e = mul(e, unary());
            else if (consume('/')) e = div(e, unary());
            else return e;
        }
    }

    ExprPtr unary() {
        if (consume('-')) return neg(unary());
        if (consume('+')) return unary();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (consume('^')) {
            const long e = integer_exponent();
            return powi(base, e);
        }
        return base;
    }

    long integer_exponent() {
        skip_ws();
        bool paren = consume('(');
        skip_ws();
        bool negative = false;
        if (consume('-')) negative = true;
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            fail("expected integer exponent after '^'");
        long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        if (paren && !consume(')')) fail("expected ')' closing exponent");
        return negative ? -v : v;
    }

    ExprPtr primary() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of expression");
        const char c = src[pos];
        if (c == '(') {
            ++pos;
            ExprPtr e = expression();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    ExprPtr number() {
        const size_t start = pos;
        while (pos < src.size() &&
               (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.'))
            ++pos;
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            size_t save = pos;
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            } else {
                pos = save; // not an exponent, e.g. "2exp(...)" is a parse error later
            }
        }
        const std::string tok = src.substr(start, pos - start);
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == nullptr || *end != '\0') {
            pos = start;
            fail("malformed number '" + tok + "'");
        }
        return constant({v, 0.0});
    }

    ExprPtr identifier() {
        const size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        const std::string name = src.substr(start, pos - start);
        if (name == "i") return constant({0.0, 1.0});
        if (name == "pi") return constant({kPi, 0.0});
        if (name == "zeta") return variable_zeta();
        if (name == "z") {
            if (k != 1) {
                pos = start;
                fail("'z' alias requires dimension 1; use z1..zk");
            }
            return variable_z(0);
        }
        if (name.size() >= 2 && name[0] == 'z') {
            bool digits = true;
            for (size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
            if (digits) {
                const int idx = std::atoi(name.c_str() + 1);
                if (idx < 1 || idx > k) {
                    pos = start;
                    fail("variable " + name + " out of range for dimension " +
                         std::to_string(k));
                }
                return variable_z(idx - 1);
            }
        }
        if (name == "exp" || name == "log" || name == "atan" || name == "sqrt") {
            if (!consume('(')) fail("expected '(' after function " + name);
            ExprPtr arg = expression();
            if (!consume(')')) fail("expected ')' closing " + name);
            if (name == "exp") return fn_exp(arg);
            if (name == "log") return fn_log(arg);
            if (name == "atan") return fn_atan(arg);
            return fn_sqrt(arg);
        }
        pos = start;
        fail("unknown identifier '" + name + "'");
    }
};

} // namespace

ExprPtr parse_expression(const std::string& text, int dimension) {
    if (dimension < 1) throw ConfigError("parse: dimension must be >= 1");
    Parser p{text, dimension};
    return p.parse();
}

} // namespace gfa

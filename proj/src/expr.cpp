#include <e1dirac/expr.hpp>

#include <cctype>

namespace e1dirac {

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& coords;
    std::size_t pos = 0;
    int n;

    Parser(const std::string& t, const std::vector<std::string>& c)
        : text(t), coords(c), n(static_cast<int>(c.size())) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos != text.size()) throw parse_error(pos, "unexpected trailing input");
        return v;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                std::size_t at = pos;
                Scalar d = unary();
                if (d.is_zero()) throw parse_error(at, "division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        bool neg = false;
        for (;;) {
            if (eat('-')) {
                neg = !neg;
            } else if (eat('+')) {
                // no-op
            } else {
                break;
            }
        }
        Scalar v = power();
        return neg ? -v : v;
    }

    Scalar power() {
        Scalar v = atom();
        while (eat('^')) {
            skip_ws();
            std::size_t at = pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw parse_error(at, "exponent must be a nonnegative integer");
            unsigned long e = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                e = e * 10 + static_cast<unsigned long>(text[pos] - '0');
                if (e > 1000000) throw parse_error(at, "exponent too large");
                ++pos;
            }
            v = v.pow(static_cast<unsigned>(e));
        }
        return v;
    }

    Scalar atom() {
        skip_ws();
        if (pos >= text.size()) throw parse_error(pos, "unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Scalar v = expr();
            if (!eat(')')) throw parse_error(pos, "expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            mpz_class z(text.substr(start, pos - start));
            return Scalar::constant(n, Rat(z));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            for (int i = 0; i < n; ++i)
                if (coords[i] == name) return Scalar::variable(n, i);
            throw parse_error(start, "unknown variable '" + name + "'");
        }
        throw parse_error(pos, std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Scalar parse_expression(const std::string& text, const std::vector<std::string>& coords) {
    return Parser(text, coords).parse();
}

} // namespace e1dirac

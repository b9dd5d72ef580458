#include "folium/parse.hpp"

#include <cctype>

namespace folium {

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        return Integer(s.substr(start, pos - start));
    }

    MPoly number() {
        Integer num = integer();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            Integer den = integer();
            if (den == 0) throw ParseError("zero denominator", pos);
            return MPoly::constant(static_cast<int>(vars.size()), Rational(num, den));
        }
        return MPoly::constant(static_cast<int>(vars.size()), Rational(num));
    }

    MPoly base() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            MPoly e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name)
                    return MPoly::variable(static_cast<int>(vars.size()),
                                           static_cast<int>(i));
            throw ParseError("unknown identifier '" + name + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    MPoly factor() {
        skip_ws();
        if (pos < s.size() && s[pos] == '-') {
            ++pos;
            return -factor();
        }
        MPoly b = base();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            std::size_t at = pos;
            Integer e = integer();
            if (e < 0 || e > 1000) throw ParseError("exponent out of range", at);
            return b.pow(static_cast<int>(e.get_si()));
        }
        return b;
    }

    MPoly term() {
        MPoly t = factor();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                t = t * factor();
            } else {
                break;
            }
        }
        return t;
    }

    MPoly expr() {
        MPoly e = term();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                e += term();
            } else if (pos < s.size() && s[pos] == '-') {
                ++pos;
                e -= term();
            } else {
                break;
            }
        }
        return e;
    }
};

}  // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
    Parser p{text, var_names};
    MPoly e = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input (implicit multiplication is not allowed)", p.pos);
    return e;
}

std::string poly_str(const MPoly& p, const std::vector<std::string>& var_names) {
    return p.str(var_names);
}

}  // namespace folium

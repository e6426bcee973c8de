#include "invstab/poly_parse.hpp"

#include <cctype>

#include "invstab/errors.hpp"

namespace invstab {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    RatRing ring;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw invalid_input("parse error at position " + std::to_string(i) + ": " + what);
    }

    Int integer() {
        skip();
        const size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected a digit");
        return Int(s.substr(start, i - start));
    }

    QPoly atom() {
        const char c = peek();
        if (c == '(') {
            ++i;
            QPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 't') {
            ++i;
            return poly_monomial(ring, ring.one(), 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Int num = integer();
            if (eat('/')) {
                const Int den = integer();
                if (sgn(den) == 0) fail("zero denominator");
                Rat q(num, den);
                q.canonicalize();
                return poly_const(ring, q);
            }
            return poly_const(ring, Rat(num));
        }
        fail("expected a number, 't', or '('");
    }

    QPoly factor() {
        if (eat('-')) return poly_neg(ring, factor());
        if (eat('+')) return factor();
        QPoly base = atom();
        if (eat('^')) {
            const Int e = integer();
            if (e > 4096) fail("exponent too large");
            return poly_pow(ring, base, e.get_ui());
        }
        return base;
    }

    QPoly term() {
        QPoly f = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++i;
                f = poly_mul(ring, f, factor());
            } else if (c == 't' || c == '(') {
                // implicit multiplication: "2t", "3(t+1)"
                f = poly_mul(ring, f, factor());
            } else {
                return f;
            }
        }
    }

    QPoly expr() {
        QPoly f = term();
        while (true) {
            if (eat('+'))
                f = poly_add(ring, f, term());
            else if (eat('-'))
                f = poly_sub(ring, f, term());
            else
                return f;
        }
    }

    QPoly parse() {
        QPoly f = expr();
        skip();
        if (i != s.size()) fail("trailing input");
        return f;
    }
};

std::string rat_str(const Rat& q) {
    return q.get_str();
}

}  // namespace

QPoly parse_qpoly(const std::string& text) {
    Parser p(text);
    return p.parse();
}

std::string qpoly_to_string(const QPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long i = f.deg(); i >= 0; --i) {
        const Rat& q = f.c[static_cast<size_t>(i)];
        if (sgn(q) == 0) continue;
        const bool first = out.empty();
        Rat a = q;
        if (!first) {
            out += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        const bool unit_coeff = (a == 1 && i > 0);
        if (!unit_coeff) out += rat_str(a);
        if (i > 0) {
            if (!unit_coeff) out += "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace invstab

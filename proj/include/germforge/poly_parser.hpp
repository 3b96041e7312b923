#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace germ {

// Polynomial grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*          ('*' may be omitted)
//   factor := base ('^' nat)*
//   base   := nat ['/' nat] | variable | '(' expr ')'
// Whitespace is insignificant. Variables must belong to the ring.

namespace detail {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Cursor(const std::string& text) : s(text) {}

    void skip_ws_and_comments() {
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '#') {
                while (pos < s.size() && s[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

class PolyParser {
    Cursor& c_;
    const Ring& ring_;

public:
    PolyParser(Cursor& c, const Ring& ring) : c_(c), ring_(ring) {}

    QPoly expr() {
        c_.skip_ws_and_comments();
        bool neg = false;
        if (c_.peek() == '-') { neg = true; c_.advance(); }
        else if (c_.peek() == '+') { c_.advance(); }
        QPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            c_.skip_ws_and_comments();
            char op = c_.peek();
            if (op != '+' && op != '-') break;
            c_.advance();
            QPoly t = term();
            acc = op == '+' ? acc + t : acc - t;
        }
        return acc;
    }

private:
    QPoly term() {
        QPoly acc = factor();
        for (;;) {
            c_.skip_ws_and_comments();
            char ch = c_.peek();
            if (ch == '*') {
                c_.advance();
                acc = acc * factor();
            } else if (ch == '(' || std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' ||
                       std::isdigit(static_cast<unsigned char>(ch))) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    QPoly factor() {
        QPoly b = base();
        for (;;) {
            c_.skip_ws_and_comments();
            if (c_.peek() != '^') break;
            c_.advance();
            long e = natural("exponent");
            QPoly p = QPoly::constant(ring_, Rational(1));
            for (long i = 0; i < e; ++i) p = p * b;
            b = std::move(p);
        }
        return b;
    }

    QPoly base() {
        c_.skip_ws_and_comments();
        char ch = c_.peek();
        if (ch == '(') {
            c_.advance();
            QPoly inner = expr();
            c_.skip_ws_and_comments();
            if (c_.peek() != ')') c_.fail("expected ')'");
            c_.advance();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num = digits();
            c_.skip_ws_and_comments();
            if (c_.peek() == '/') {
                c_.advance();
                std::string den = digits();
                if (den == "0") c_.fail("zero denominator");
                return QPoly::constant(ring_, Rational::from_string(num + "/" + den));
            }
            return QPoly::constant(ring_, Rational::from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            int startline = c_.line, startcol = c_.col;
            std::string name = identifier();
            int idx = ring_->var_index(name);
            if (idx < 0)
                throw ParseError("unknown variable '" + name + "'", startline, startcol);
            return QPoly::variable(ring_, idx);
        }
        c_.fail("expected a number, variable, or '('");
    }

    std::string digits() {
        c_.skip_ws_and_comments();
        if (!std::isdigit(static_cast<unsigned char>(c_.peek()))) c_.fail("expected a number");
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(c_.peek()))) {
            out += c_.peek();
            c_.advance();
        }
        return out;
    }

    long natural(const char* what) {
        std::string d = digits();
        if (d.size() > 6) c_.fail(std::string(what) + " too large");
        return std::stol(d);
    }

    std::string identifier() {
        std::string out;
        while (std::isalnum(static_cast<unsigned char>(c_.peek())) || c_.peek() == '_') {
            out += c_.peek();
            c_.advance();
        }
        return out;
    }
};

} // namespace detail

/// Parse a single polynomial; the whole string must be consumed.
inline QPoly parse_poly(const std::string& text, const Ring& ring) {
    detail::Cursor c(text);
    detail::PolyParser p(c, ring);
    QPoly result = p.expr();
    c.skip_ws_and_comments();
    if (!c.eof()) c.fail("unexpected trailing input");
    return result;
}

} // namespace germ

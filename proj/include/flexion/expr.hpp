#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "flexion/derivations.hpp"

namespace flexion {

/// Recursive-descent reader for derivation expressions:
///
///   expr   := term (('+' | '-') term)*
///   term   := '-' term | [rational ['*']] atom
///   atom   := eps(N) | phi0 | h(P,Q,D) | [expr, expr] | ad(expr)^K(expr) | (expr)
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    Derivation parse() {
        Derivation d = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return d;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("integer too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    Derivation expr() {
        Derivation acc = term();
        for (;;) {
            if (accept("+"))
                acc = acc + term();
            else if (accept("-"))
                acc = acc - term();
            else
                return acc;
        }
    }

    Derivation term() {
        if (accept("-")) return Rational(-1) * term();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const long n = integer();
            Rational c(n);
            if (accept("/")) {
                const long d = integer();
                if (d == 0) fail("zero denominator");
                c = Rational(n, d);
            }
            accept("*");
            return c * atom();
        }
        return atom();
    }

    Derivation atom() {
        if (accept("eps")) {
            expect("(");
            const long n = integer();
            expect(")");
            if (n % 2) fail("eps index must be even");
            return make_eps(static_cast<int>(n));
        }
        if (accept("phi0")) return make_phi0();
        if (accept("h")) {
            expect("(");
            const long p = integer();
            expect(",");
            const long q = integer();
            expect(",");
            const long d = integer();
            expect(")");
            return make_h(static_cast<int>(p), static_cast<int>(q), static_cast<int>(d)).derivation;
        }
        if (accept("ad")) {
            expect("(");
            Derivation x = expr();
            expect(")");
            expect("^");
            const long k = integer();
            expect("(");
            Derivation y = expr();
            expect(")");
            return der_ad_pow(x, static_cast<int>(k), std::move(y));
        }
        if (accept("[")) {
            Derivation x = expr();
            expect(",");
            Derivation y = expr();
            expect("]");
            return der_bracket(x, y);
        }
        if (accept("(")) {
            Derivation x = expr();
            expect(")");
            return x;
        }
        fail("expected eps, phi0, h, ad, a bracket or a parenthesis");
    }
};

inline Derivation parse_derivation(std::string_view text) { return ExprParser(text).parse(); }

} // namespace flexion

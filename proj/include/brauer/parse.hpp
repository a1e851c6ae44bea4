/*
   Copyright 2026 The brauer-residues Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_PARSE_HPP
#define BRAUER_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "symbols.hpp"

namespace brauer {

namespace detail {

/**
 * Recursive-descent reader for the shared input grammar:
 *   expr   := term (('+' | '-') term)*
 *   term   := unary (('*' | '/' | juxtaposition) unary)*
 *   unary  := ('+' | '-') unary | power
 *   power  := primary ('^' ['-'] integer)?
 *   primary:= integer | 't' | '(' expr ')'
 *   symbols:= [sterm (('+' | '-') sterm)*]
 *   sterm  := [integer ['*']] '(' expr ',' expr ')' '_' integer
 */
class Reader {
public:
    Reader(std::string_view text, const FiniteField& F) : s_(text), F_(F) {}

    RatFunc expression() {
        RatFunc acc = term();
        for (;;) {
            skip();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    RatFunc whole_expression() {
        RatFunc r = expression();
        expect_end();
        return r;
    }

    SymbolClass symbols(u64 n) {
        SymbolClass out(F_, n);
        skip();
        if (at_end()) return out;
        i64 sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        for (;;) {
            symbol_term(out, n, sign);
            skip();
            if (at_end()) return out;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else fail("expected '+' or '-' between symbols");
        }
    }

    void expect_end() {
        skip();
        if (!at_end()) fail("unexpected trailing input");
    }

private:
    void symbol_term(SymbolClass& out, u64 n, i64 sign) {
        skip();
        i64 mult = 1;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            mult = integer();
            skip();
            eat('*');
        }
        skip();
        if (!eat('(')) fail("expected '(' to open a symbol");
        RatFunc a = expression();
        skip();
        if (!eat(',')) fail("expected ',' inside symbol");
        RatFunc b = expression();
        skip();
        if (!eat(')')) fail("expected ')' to close symbol");
        skip();
        if (!eat('_')) fail("expected '_n' after symbol");
        skip();
        const i64 sub = integer();
        if (sub != static_cast<i64>(n))
            throw ConstraintError("symbol subscript " + std::to_string(sub) + " does not match n=" + std::to_string(n));
        if (a.is_zero() || b.is_zero()) throw ConstraintError("symbol arguments must be nonzero");
        out.add(a, b, sign * mult);
    }

    RatFunc term() {
        RatFunc acc = unary();
        for (;;) {
            skip();
            if (eat('*')) acc = acc * unary();
            else if (eat('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else if (pos_ < s_.size() && (s_[pos_] == 't' || s_[pos_] == '(' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        skip();
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        skip();
        if (eat('^')) {
            skip();
            const bool neg = eat('-');
            skip();
            i64 e = integer();
            if (neg) e = -e;
            if (e < 0 && base.is_zero()) fail("negative power of zero");
            return base.pow(e);
        }
        return base;
    }

    RatFunc primary() {
        skip();
        if (at_end()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == 't') {
            ++pos_;
            return RatFunc::t(F_);
        }
        if (c == '(') {
            ++pos_;
            RatFunc inner = expression();
            skip();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::from_int(F_, integer() % static_cast<i64>(F_.characteristic()));
        fail(std::string("unexpected character '") + c + "'");
    }

    i64 integer() {
        skip();
        const std::size_t start = pos_;
        i64 v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (i64{1} << 40)) fail("integer literal too large");
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    std::string_view s_;
    const FiniteField& F_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses e.g. "t^2+3*t+1" or "(t+1)/(t^2-2)"; integers are reduced mod p.
inline RatFunc parse_ratfunc(std::string_view text, const FiniteField& F) {
    return detail::Reader(text, F).whole_expression();
}

inline Poly parse_poly(std::string_view text, const FiniteField& F) {
    RatFunc f = parse_ratfunc(text, F);
    if (!f.is_polynomial()) throw ParseError("expected a polynomial, got " + f.to_string());
    return f.num().scaled(f.den().leading().inverse());
}

/// "inf" (or "infinity", "oo") or a polynomial generating the place; the polynomial is made monic.
inline Place parse_place(std::string_view text, const FiniteField& F) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "inf" || t == "infinity" || t == "oo") return Place::infinity(F);
    return Place::finite(parse_poly(t, F));
}

/// Parses "(a, b)_n" terms joined by '+' / '-', with optional integer multipliers; empty text is the zero class.
inline SymbolClass parse_symbol(std::string_view text, const FiniteField& F, u64 n) {
    return detail::Reader(text, F).symbols(n);
}

} // namespace brauer

#endif // BRAUER_PARSE_HPP

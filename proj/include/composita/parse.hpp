#pragma once

// Text input: base-field tokens ("Q", "GF(p)", "GF(p)(t)") and polynomial
// expressions in x whose coefficients are integers, integer ratios, or
// rational expressions in t, depending on the base.  Errors carry a 1-based
// column so callers can point at the offending character.

#include "composita/poly.hpp"

#include <cctype>
#include <cstring>

namespace composita {

/// "Q", "GF(p)", or "GF(p)(t)" with p a prime below 2^31.
inline Field parse_base_token(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "Q") return Field::rationals();
    if (s.rfind("GF(", 0) == 0) {
        std::size_t close = s.find(')');
        if (close != std::string::npos && close > 3) {
            std::string digits = s.substr(3, close - 3);
            bool numeric = !digits.empty() &&
                           std::all_of(digits.begin(), digits.end(), [](char c) {
                               return std::isdigit(static_cast<unsigned char>(c));
                           });
            std::string tail = s.substr(close + 1);
            if (numeric && digits.size() <= 9 && (tail.empty() || tail == "(t)")) {
                long long p = std::stoll(digits);
                return tail.empty() ? Field::prime(static_cast<std::uint32_t>(p))
                                    : Field::rational_functions(static_cast<std::uint32_t>(p));
            }
        }
    }
    throw parse_error("base must be Q, GF(p), or GF(p)(t), got '" + raw + "'", 1);
}

namespace detail {

struct PTok {
    enum Kind { Int, Sym, End } kind;
    std::string digits;
    char sym = 0;
    std::size_t col = 0;
};

inline std::vector<PTok> lex_poly(const std::string& s) {
    std::vector<PTok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({PTok::Int, s.substr(i, j - i), 0, i + 1});
            i = j;
            continue;
        }
        if (std::strchr("+-*/^()xt", c)) {
            out.push_back({PTok::Sym, {}, c, i + 1});
            ++i;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", i + 1);
    }
    out.push_back({PTok::End, {}, 0, s.size() + 1});
    return out;
}

/// Recursive-descent evaluator producing a polynomial in x over F.
/// expr   := sign? term (("+"|"-") term)*
/// term   := factor (("*"|"/")? factor)*     (juxtaposition = "*")
/// factor := atom ("^" nat)?
/// atom   := integer | "x" | "t" | "(" expr ")"
class PolyParser {
public:
    PolyParser(const Field& F, std::vector<PTok> toks)
        : F_(F), toks_(std::move(toks)) {
        if (F_.base() == BaseKind::RationalFunctions) t_val_ = F_.t_generator();
    }

    Poly run() {
        Poly f = expr();
        const PTok& t = peek();
        if (t.kind != PTok::End)
            throw parse_error("unexpected trailing input", t.col);
        return f;
    }

private:
    const Field& F_;
    std::vector<PTok> toks_;
    std::size_t pos_ = 0;
    std::optional<Value> t_val_;

    const PTok& peek() const { return toks_[pos_]; }
    void advance() { ++pos_; }
    bool at_sym(char c) const { return peek().kind == PTok::Sym && peek().sym == c; }

    Poly expr() {
        bool neg = false;
        if (at_sym('+') || at_sym('-')) {
            neg = peek().sym == '-';
            advance();
        }
        Poly acc = term();
        if (neg) acc = Poly(F_) - acc;
        while (at_sym('+') || at_sym('-')) {
            bool minus = peek().sym == '-';
            advance();
            Poly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (at_sym('*')) {
                advance();
                acc = acc * factor();
            } else if (at_sym('/')) {
                std::size_t col = peek().col;
                if (F_.base() == BaseKind::Prime)
                    throw parse_error("rational coefficient in a prime field", col);
                advance();
                Poly d = factor();
                if (d.deg() > 0)
                    throw parse_error("cannot divide by an expression containing x", col);
                if (d.is_zero()) throw parse_error("division by zero", col);
                Value inv;
                try {
                    inv = F_.inv(d.at(0));
                } catch (const domain_error&) {
                    throw parse_error("division by zero", col);
                }
                acc = acc * Poly::constant(F_, inv);
            } else if (starts_atom()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_atom() const {
        const PTok& t = peek();
        if (t.kind == PTok::Int) return true;
        return t.kind == PTok::Sym && (t.sym == 'x' || t.sym == 't' || t.sym == '(');
    }

    Poly factor() {
        Poly base = atom();
        if (at_sym('^')) {
            std::size_t col = peek().col;
            advance();
            if (peek().kind != PTok::Int)
                throw parse_error("expected an exponent after '^'", col);
            const std::string& d = peek().digits;
            if (d.size() > 3 || std::stoul(d) > 512)
                throw parse_error("exponent too large", peek().col);
            unsigned long e = std::stoul(d);
            advance();
            Poly out = Poly::one(F_);
            for (unsigned long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    Poly atom() {
        const PTok& t = peek();
        if (t.kind == PTok::Int) {
            Value v = F_.from_rational(Rational(BigInt(t.digits)));
            advance();
            return Poly::constant(F_, v);
        }
        if (t.kind == PTok::Sym && t.sym == 'x') {
            advance();
            return Poly::x(F_);
        }
        if (t.kind == PTok::Sym && t.sym == 't') {
            if (!t_val_)
                throw parse_error("the variable t is only available over GF(p)(t)", t.col);
            advance();
            return Poly::constant(F_, *t_val_);
        }
        if (t.kind == PTok::Sym && t.sym == '(') {
            std::size_t open = t.col;
            advance();
            Poly inside = expr();
            if (!at_sym(')')) throw parse_error("unbalanced '(' ", open);
            advance();
            return inside;
        }
        throw parse_error("expected a coefficient, x, t, or '('", t.col);
    }
};

} // namespace detail

/// Parse a polynomial in x over F.  Whitespace-insensitive; errors carry the
/// 1-based column of the offending token.
inline Poly parse_poly(const std::string& s, const Field& F) {
    return detail::PolyParser(F, detail::lex_poly(s)).run();
}

} // namespace composita

#pragma once

// Canonical text rendering.  Printing then re-parsing any polynomial or
// element string yields the same object, so reports are stable fixtures.
// Tower generators are written a, b, c, ... in adjunction order; the
// indeterminates x (polynomials) and t (rational-function base) keep their
// input spellings.

#include "composita/towers.hpp"

#include <sstream>

namespace composita {

/// One symbol per extension level above the base: a, b, c, ...
inline std::vector<std::string> generator_symbols(const Field& L) {
    std::vector<std::string> out;
    for (std::size_t lev = 1; lev <= L.levels_used(); ++lev)
        out.push_back(std::string(1, static_cast<char>('a' + (lev - 1))));
    return out;
}

namespace detail {

inline bool needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+' || c == '*' || c == '/' || c == ' ') return true;
        if (c == '-' && i > 0) return true;
    }
    return false;
}

/// Join rendered terms with " + " / " - ", folding a leading minus sign.
inline std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        if (!t.empty() && t.front() == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

/// coeff * var^k with the usual abbreviations (1*x = x, x^1 = x).
inline std::string render_term(const std::string& coeff, const std::string& var, std::size_t k) {
    std::string power;
    if (k == 1)
        power = var;
    else if (k > 1)
        power = var + "^" + std::to_string(k);
    if (power.empty()) return coeff;
    if (coeff == "1") return power;
    if (coeff == "-1") return "-" + power;
    if (needs_parens(coeff)) return "(" + coeff + ")*" + power;
    return coeff + "*" + power;
}

inline std::string tvec_str(const TVec& v) {
    if (v.empty()) return "0";
    std::vector<std::string> terms;
    for (std::size_t k = v.size(); k-- > 0;) {
        if (v[k] == 0) continue;
        terms.push_back(render_term(std::to_string(v[k]), "t", k));
    }
    return join_terms(terms);
}

} // namespace detail

/// Base-field scalars: "3", "-3/2", residues "2", t-rationals "(t^2 + 1)/(t + 1)".
inline std::string scalar_str(const Value& v) {
    if (auto* q = std::get_if<Rational>(&v.rep)) {
        std::ostringstream os;
        os << *q;
        return os.str();
    }
    if (auto* e = std::get_if<FpElem>(&v.rep)) return std::to_string(e->r);
    if (auto* r = std::get_if<TRat>(&v.rep)) {
        std::string num = detail::tvec_str(r->num);
        if (r->den == detail::TVec{1}) return num;
        std::string den = detail::tvec_str(r->den);
        if (detail::needs_parens(num)) num = "(" + num + ")";
        if (detail::needs_parens(den)) den = "(" + den + ")";
        return num + "/" + den;
    }
    throw internal_error("scalar_str applied to an extension element");
}

/// Element of L as an expression in the tower's generator symbols.
inline std::string value_str(const Field& L, const Value& v) {
    if (!std::holds_alternative<ExtVec>(v.rep)) return scalar_str(v);
    const auto& c = std::get<ExtVec>(v.rep).c;
    Field lower = L.subfield();
    std::string sym = generator_symbols(L).back();
    std::vector<std::string> terms;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == lower.zero()) continue;
        terms.push_back(detail::render_term(value_str(lower, c[k]), sym, k));
    }
    return detail::join_terms(terms);
}

/// Polynomial over any tower field, highest degree first.
inline std::string poly_str(const Poly& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    const Field& F = f.k;
    std::vector<std::string> terms;
    for (std::size_t k = static_cast<std::size_t>(f.deg()) + 1; k-- > 0;) {
        if (f.at(k) == F.zero()) continue;
        terms.push_back(detail::render_term(value_str(F, f.at(k)), var, k));
    }
    return detail::join_terms(terms);
}

} // namespace composita

#pragma once

// Classification of an extension K ⊂ L: finite, algebraic, separable,
// normal, Galois — plus the auxiliary facts other components hypothesize
// about (automorphism count, L^G = K, perfect base).
//
// Every answer is three-valued: capability limits surface as UNKNOWN with a
// reason, never as a silent default.  The Galois verdict is computed as
// separable ∧ normal and hard-checked against the independent count
// |Aut_K(L)| = [L:K]; disagreement is an internal error by design.

#include <map>
#include <string>

#include "composita/towers.hpp"

namespace composita {

enum class Tri { False, True, Unknown };

struct TriVal {
    Tri v = Tri::Unknown;
    std::string reason; // set when v == Unknown

    static TriVal yes() { return {Tri::True, {}}; }
    static TriVal no() { return {Tri::False, {}}; }
    static TriVal unknown(std::string why) { return {Tri::Unknown, std::move(why)}; }
    static TriVal of(bool b) { return b ? yes() : no(); }

    bool is_true() const { return v == Tri::True; }
    bool is_false() const { return v == Tri::False; }
    bool known() const { return v != Tri::Unknown; }
};

inline const char* tri_name(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "unknown";
    }
}

struct ExtensionReport {
    std::optional<std::size_t> degree; // empty = INFINITE
    TriVal finite, algebraic, separable, normal, galois;
    std::optional<std::size_t> aut_order;
    TriVal fixed_field_is_K;
    std::string group_id = "unidentified";
    std::map<std::string, TriVal> hypothesis_flags;
};

/// [L:K], or empty for the infinite marker.
inline std::optional<std::size_t> degree_of(const Extension& E) { return E.degree; }

inline bool is_perfect_base(const Field& K) { return is_perfect(K); }

/// Separability of K ⊂ L, step by step: each level's defining polynomial is
/// irreducible, so it is separable exactly when its derivative is nonzero.
inline bool is_separable(const Extension& E) {
    if (!E.degree) throw capability_error("separability behind an infinite marker is not decidable");
    for (std::size_t lev = E.lower.levels_used() + 1; lev <= E.upper.levels_used(); ++lev) {
        Field at = E.upper.at_level(lev);
        Poly m(at.subfield(), at.level_modulus());
        if (derivative(m).is_zero()) return false;
    }
    return true;
}

/// Normality: the primitive generator's minimal polynomial over K splits
/// into linear factors over L.
inline bool is_normal(const Extension& E) {
    if (!E.degree) throw capability_error("normality behind an infinite marker is not decidable");
    if (*E.degree == 1) return true;
    auto fl = detail::flatten_tower(E.upper, E.lower);
    for (const auto& [g, m] : factor_over_extension(fl.g, E.upper))
        if (g.deg() > 1) return false;
    return true;
}

/// Galois = separable ∧ normal; cross-checked against |Aut| = degree whenever
/// the automorphism group is computable.
inline bool is_galois(const Extension& E) {
    if (!E.degree) throw capability_error("the Galois property behind an infinite marker is not decidable");
    bool g = is_separable(E) && is_normal(E);
    try {
        GroupTable aut = automorphisms(E.upper, E.lower);
        bool count_route = aut.order() == *E.degree;
        if (g != count_route)
            throw internal_error("separable-and-normal disagrees with the automorphism count");
    } catch (const capability_error&) {
        // count route unavailable; the definitional route stands alone
    }
    return g;
}

/// Full report; every capability error is converted to UNKNOWN with a reason.
inline ExtensionReport classify(const Extension& E) {
    ExtensionReport r;
    r.degree = E.degree;
    if (!E.degree) {
        r.finite = TriVal::no();
        r.algebraic = TriVal::of(E.upper.infinite_step_algebraic());
        auto why = std::string("infinite-degree marker: not computable from the descriptor");
        r.separable = TriVal::unknown(why);
        r.normal = TriVal::unknown(why);
        r.galois = TriVal::unknown(why);
        r.fixed_field_is_K = TriVal::unknown(why);
        r.hypothesis_flags["perfect_base"] = TriVal::of(is_perfect_base(E.lower));
        r.hypothesis_flags["fixed_field_is_K"] = r.fixed_field_is_K;
        r.hypothesis_flags["aut_order_equals_degree"] = TriVal::unknown(why);
        return r;
    }
    r.finite = TriVal::yes();
    r.algebraic = TriVal::yes(); // finite implies algebraic
    try {
        r.separable = TriVal::of(is_separable(E));
    } catch (const capability_error& e) {
        r.separable = TriVal::unknown(e.what());
    }
    try {
        r.normal = TriVal::of(is_normal(E));
    } catch (const capability_error& e) {
        r.normal = TriVal::unknown(e.what());
    }
    std::optional<GroupTable> aut;
    try {
        aut = automorphisms(E.upper, E.lower);
        r.aut_order = aut->order();
        r.group_id = aut->group_name;
    } catch (const capability_error& e) {
        r.group_id = "unidentified";
    }
    if (r.separable.known() && r.normal.known()) {
        bool g = r.separable.is_true() && r.normal.is_true();
        if (r.aut_order && (*r.aut_order == *E.degree) != g)
            throw internal_error("separable-and-normal disagrees with the automorphism count");
        r.galois = TriVal::of(g);
    } else {
        r.galois = TriVal::unknown("depends on an undecided separability/normality verdict");
    }
    if (aut) {
        // L^G = K exactly when the joint fixed space of the full group is
        // one-dimensional over K
        std::size_t n = *E.degree;
        if (n == 1) {
            r.fixed_field_is_K = TriVal::yes();
        } else {
            try {
                auto ff = fixed_field(E.upper, E.lower, *aut, full_subgroup(*aut));
                r.fixed_field_is_K = TriVal::of(ff.equals_K);
            } catch (const capability_error& e) {
                r.fixed_field_is_K = TriVal::unknown(e.what());
            }
        }
    } else {
        r.fixed_field_is_K = TriVal::unknown("automorphism group not computable here");
    }
    r.hypothesis_flags["perfect_base"] = TriVal::of(is_perfect_base(E.lower));
    r.hypothesis_flags["fixed_field_is_K"] = r.fixed_field_is_K;
    r.hypothesis_flags["aut_order_equals_degree"] =
        r.aut_order ? TriVal::of(*r.aut_order == *E.degree)
                    : TriVal::unknown("automorphism group not computable here");
    return r;
}

} // namespace composita

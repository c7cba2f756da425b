#pragma once

// The subring T = K + X·L[X] of L[X] attached to an extension K ⊂ L:
// polynomials over L whose constant coefficient lies in the base field.
// Alongside arithmetic, this header answers the structural questions about
// T — when it is noetherian, how the ideal X·L[X] is generated, and bounded
// ideal-membership certificates that can be replayed by exact expansion.

#include "composita/towers.hpp"

namespace composita {

struct CompositeRing {
    Extension ext; // K = ext.lower, L = ext.upper
};

inline CompositeRing make_composite(const Extension& E) { return CompositeRing{E}; }

/// Membership test for T: every coefficient lies in L by construction, so
/// only the constant coefficient is at issue.
inline bool composite_contains(const CompositeRing& T, const Poly& f) {
    T.ext.upper.require_same(f.k);
    if (f.is_zero()) return true;
    return T.ext.upper.lower_to(f.at(0), T.ext.lower).has_value();
}

/// An element of T.  The constant-coefficient invariant is enforced here and
/// re-checked after every arithmetic operation.
struct CompositeElement {
    CompositeRing ring;
    Poly f;

    CompositeElement(CompositeRing T, Poly g) : ring(std::move(T)), f(std::move(g)) {
        if (!composite_contains(ring, f))
            throw domain_error("constant coefficient does not lie in the base field");
    }
};

inline CompositeElement composite_add(const CompositeElement& a, const CompositeElement& b) {
    return CompositeElement(a.ring, a.f + b.f);
}

inline CompositeElement composite_sub(const CompositeElement& a, const CompositeElement& b) {
    return CompositeElement(a.ring, a.f - b.f);
}

inline CompositeElement composite_mul(const CompositeElement& a, const CompositeElement& b) {
    return CompositeElement(a.ring, a.f * b.f);
}

/// T is noetherian exactly when [L:K] is finite.
inline bool is_noetherian(const CompositeRing& T) { return T.ext.degree.has_value(); }

/// Monomial basis of L over K in degree-lex order (1 first, then the level
/// generators by adjunction order, then products).  Exponent tuples are
/// compared by total degree, ties broken with the earliest-adjoined
/// generator's exponent weighted highest.
inline std::vector<Value> monomial_basis(const Field& L, const Field& K) {
    L.require_prefix(K);
    std::size_t levels = L.levels_used() - K.levels_used();
    std::vector<std::size_t> degs;
    std::vector<Value> gens;
    for (std::size_t lev = K.levels_used() + 1; lev <= L.levels_used(); ++lev) {
        Field at = L.at_level(lev);
        degs.push_back(at.level_degree());
        gens.push_back(L.lift_from(at, at.generator()));
    }
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur(levels, 0);
    for (;;) {
        tuples.push_back(cur);
        std::size_t j = 0;
        while (j < levels) {
            if (++cur[j] < degs[j]) break;
            cur[j] = 0;
            ++j;
        }
        if (j == levels) break;
    }
    std::sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
        std::size_t ta = 0, tb = 0;
        for (auto e : a) ta += e;
        for (auto e : b) tb += e;
        if (ta != tb) return ta < tb;
        return a > b; // earlier generators weighted highest
    });
    std::vector<Value> out;
    for (const auto& t : tuples) {
        Value m = L.one();
        for (std::size_t j = 0; j < levels; ++j)
            for (std::size_t e = 0; e < t[j]; ++e) m = L.mul(m, gens[j]);
        out.push_back(m);
    }
    return out;
}

/// Generators of the ideal X·L[X] of T: one element b·X per monomial basis
/// element b of L over K.  The first is always X itself.
inline std::vector<CompositeElement> xl_ideal_generators(const CompositeRing& T) {
    if (!T.ext.degree)
        throw domain_error("X*L[X] is not finitely generated over T when the degree is infinite");
    const Field& L = T.ext.upper;
    std::vector<CompositeElement> out;
    for (const auto& b : monomial_basis(L, T.ext.lower))
        out.push_back(CompositeElement(T, Poly(L, {L.zero(), b})));
    return out;
}

/// One combination target = sum of gens[j] * cofactor[j] with each cofactor
/// in T of degree <= bound.
struct TCombination {
    Poly target;
    std::vector<Poly> cofactors; // aligned with the generator list
};

struct GenerationCertificate {
    std::size_t bound = 0;
    std::vector<TCombination> rows; // one per monomial b_i X^k, k = 1..bound
};

namespace detail {

/// Solve target = sum gens[j]*t_j with t_j in T, deg t_j <= bound, as a
/// K-linear system.  Unknowns per cofactor: one K-slot for the constant term
/// plus n slots for each higher coefficient.
inline std::optional<std::vector<Poly>> t_combination(const CompositeRing& T,
                                                      const std::vector<CompositeElement>& gens,
                                                      const Poly& target,
                                                      std::size_t bound) {
    const Field& L = T.ext.upper;
    const Field& K = T.ext.lower;
    L.require_same(target.k);
    std::size_t n = *T.ext.degree;
    int maxg = 0;
    for (const auto& g : gens) maxg = std::max(maxg, g.f.deg());
    std::size_t hi = bound + std::size_t(std::max(maxg, 0)); // highest product degree
    if (std::size_t(std::max(target.deg(), 0)) > hi) return std::nullopt;
    std::size_t rows = (hi + 1) * n;

    auto poly_coords = [&](const Poly& f) {
        std::vector<Value> out;
        out.reserve(rows);
        for (std::size_t d = 0; d <= hi; ++d) {
            auto part = L.flatten(f.at(d), K);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    };

    std::vector<std::vector<Value>> cols;
    struct Slot {
        std::size_t gen, deg, coord;
    };
    std::vector<Slot> slots;
    std::vector<Value> basis = monomial_basis(L, K);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (std::size_t d = 0; d <= bound; ++d) {
            std::size_t ncoords = (d == 0) ? 1 : n; // constant term confined to K
            for (std::size_t c = 0; c < ncoords; ++c) {
                std::vector<Value> mono(d + 1, L.zero());
                mono[d] = basis[c];
                Poly prod = gens[j].f * Poly(L, mono);
                cols.push_back(poly_coords(prod));
                slots.push_back({j, d, c});
            }
        }
    }
    Mat A = Mat::from_columns(K, cols);
    auto sol = mat_solve(A, poly_coords(target));
    if (!sol) return std::nullopt;

    std::vector<Poly> cof(gens.size(), Poly::zero(L));
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (K.is_zero((*sol)[i])) continue;
        std::vector<Value> mono(slots[i].deg + 1, L.zero());
        mono[slots[i].deg] = L.mul(basis[slots[i].coord], L.lift_from(K, (*sol)[i]));
        cof[slots[i].gen] = cof[slots[i].gen] + Poly(L, mono);
    }
    // replay the combination exactly before handing it out
    Poly acc = Poly::zero(L);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!composite_contains(T, cof[j]))
            throw internal_error("cofactor left the subring");
        acc = acc + gens[j].f * cof[j];
    }
    if (!(acc == target)) throw internal_error("combination replay mismatch");
    return cof;
}

} // namespace detail

/// Certify that `gens` generate X·L[X] as an ideal of T, witnessed degree by
/// degree up to `bound`: every monomial b_i·X^k (k = 1..bound) is expressed
/// as an explicit T-combination.  Throws not_generated_error if some monomial
/// has no combination within the bound.
inline GenerationCertificate certify_generation(const CompositeRing& T,
                                                const std::vector<CompositeElement>& gens,
                                                std::size_t bound) {
    if (!T.ext.degree) throw capability_error("generation certificates need a finite degree");
    if (bound < 1) throw domain_error("bound must be at least 1");
    const Field& L = T.ext.upper;
    GenerationCertificate cert;
    cert.bound = bound;
    for (const auto& b : monomial_basis(L, T.ext.lower)) {
        for (std::size_t kx = 1; kx <= bound; ++kx) {
            std::vector<Value> mono(kx + 1, L.zero());
            mono[kx] = b;
            Poly target(L, mono);
            auto cof = detail::t_combination(T, gens, target, bound);
            if (!cof)
                throw not_generated_error("ideal not generated within bound " +
                                          std::to_string(bound));
            cert.rows.push_back({std::move(target), std::move(*cof)});
        }
    }
    return cert;
}

/// Bounded ideal membership: a replayable witness, or nothing when no
/// combination with cofactor degrees <= bound exists.
inline std::optional<TCombination> ideal_membership_bounded(const CompositeRing& T,
                                                            const std::vector<CompositeElement>& gens,
                                                            const CompositeElement& target,
                                                            std::size_t bound) {
    if (!T.ext.degree) throw capability_error("bounded membership needs a finite degree");
    auto cof = detail::t_combination(T, gens, target.f, bound);
    if (!cof) return std::nullopt;
    return TCombination{target.f, std::move(*cof)};
}

} // namespace composita

#pragma once

// Extensions and towers: construction with verified (or explicitly trusted)
// irreducibility, minimal polynomials, primitive elements, embeddings,
// automorphism groups with composition tables, and fixed fields.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "composita/factor.hpp"
#include "composita/linalg.hpp"

namespace composita {

/// A step K ⊂ L inside one tower.  `degree` is empty when the tower ends in
/// the infinite-degree marker.
struct Extension {
    Field lower;
    Field upper;
    std::optional<std::size_t> degree;
};

inline Extension make_step(const Field& K, const Field& L) {
    L.require_prefix(K);
    std::optional<std::size_t> deg;
    if (!L.has_infinite_step()) deg = L.degree_over(K);
    return Extension{K, L, deg};
}

/// L = K[x]/(f).  Irreducibility is verified where factorization (or an
/// F_p(t) decidable shape) permits; otherwise a capability error, unless the
/// caller vouches with `trusted`.
inline Extension make_extension(const Field& K, const Poly& f, bool trusted = false) {
    K.require_same(f.k);
    if (!f.is_monic() || f.deg() < 2)
        throw construction_error("defining polynomial must be monic of degree >= 2");
    if (trusted) {
        Field L = K.extended_unchecked(f.c, true);
        return make_step(K, L);
    }
    bool irr;
    try {
        irr = is_irreducible(f);
    } catch (const capability_error&) {
        throw capability_error(
            "irreducibility not verifiable over this field; pass trusted=true to assert it");
    }
    if (!irr) throw construction_error("defining polynomial is reducible");
    Field L = K.extended_unchecked(f.c, false);
    return make_step(K, L);
}

// ---------------------------------------------------------------------------
// Minimal polynomials.

/// Monic least-degree polynomial over K annihilating a (an element of L),
/// found as the first linear dependence among 1, a, a^2, ... in K-coordinates.
inline Poly min_poly(const Field& L, const Value& a, const Field& K) {
    if (L.has_infinite_step())
        throw capability_error("minimal polynomials are not computable behind an infinite marker");
    L.require_prefix(K);
    std::size_t n = L.degree_over(K);
    std::vector<std::vector<Value>> power_coords; // flatten(a^i)
    Value pw = L.one();
    for (std::size_t d = 0;; ++d) {
        if (d > n) throw internal_error("no linear dependence found below the degree bound");
        std::vector<Value> target = L.flatten(pw, K);
        if (auto dep = in_span(K, power_coords, target)) {
            // a^d = sum dep_i a^i  ->  x^d - sum dep_i x^i
            std::vector<Value> c(d + 1, K.zero());
            for (std::size_t i = 0; i < dep->size(); ++i) c[i] = K.neg((*dep)[i]);
            c[d] = K.one();
            return Poly(K, std::move(c));
        }
        power_coords.push_back(std::move(target));
        pw = L.mul(pw, a);
    }
}

// ---------------------------------------------------------------------------
// Primitive elements.

/// Result of flattening K(alpha)(beta) to K(gamma), gamma = alpha + c*beta.
struct PrimitiveElement {
    Value gamma;        // in the original two-level tower L
    Poly g;             // = min_poly(gamma) over K, degree [L:K]
    Field flat;         // K(gamma), a one-level tower over K
    Value alpha_in_flat;
    Value beta_in_flat;
    long long shift;    // the c that worked
};

namespace detail {

/// Change of coordinates: columns are flatten(gamma^i) over K.
inline Mat gamma_power_matrix(const Field& L, const Value& gamma, const Field& K, std::size_t n) {
    std::vector<std::vector<Value>> cols;
    Value pw = L.one();
    for (std::size_t i = 0; i < n; ++i) {
        cols.push_back(L.flatten(pw, K));
        pw = L.mul(pw, gamma);
    }
    return Mat::from_columns(K, cols);
}

inline bool level_separable(const Field& at) {
    Poly m(at.subfield(), at.level_modulus());
    Poly mp = derivative(m);
    if (mp.is_zero()) return false;
    return poly_gcd(m, mp).deg() == 0;
}

} // namespace detail

/// gamma = alpha + c*beta for the smallest c >= 0 (deterministic scan) with
/// [K(gamma):K] equal to the full degree.  Both added levels must be finite
/// and separable; exhausting the scan bound is an internal error, reported
/// loudly rather than silently degrading.
inline PrimitiveElement primitive_element(const Field& L, const Field& K) {
    L.require_prefix(K);
    if (L.has_infinite_step()) throw capability_error("primitive element needs a finite tower");
    if (L.levels_used() != K.levels_used() + 2)
        throw domain_error("primitive_element expects exactly two added levels");
    for (std::size_t lev = K.levels_used() + 1; lev <= L.levels_used(); ++lev)
        if (!detail::level_separable(L.at_level(lev)))
            throw capability_error("primitive element requires separable levels");

    Field mid = L.subfield();
    Value alpha = L.lift_from(mid, mid.generator());
    Value beta = L.generator();
    std::size_t n = L.degree_over(K);

    std::size_t bound = 2 * n * n;
    std::optional<BigInt> field_size = K.size();
    for (std::size_t ci = 0; ci <= bound; ++ci) {
        // over a finite K scan its elements in enumeration order; over an
        // infinite K scan the integers 0, 1, 2, ...
        Value c;
        if (field_size) {
            if (BigInt(ci) >= *field_size) break;
            c = K.element_by_index(BigInt(ci));
        } else {
            c = K.from_int((long long)ci);
        }
        Value gamma = L.add(alpha, L.mul(beta, L.lift_from(K, c)));
        Poly g = min_poly(L, gamma, K);
        if (std::size_t(g.deg()) != n) continue;
        Field flat = K.extended_unchecked(g.c, false);
        Mat P = detail::gamma_power_matrix(L, gamma, K, n);
        auto Pinv = mat_inverse(P);
        if (!Pinv) throw internal_error("gamma powers do not form a basis despite full degree");
        auto acoords = mat_apply(*Pinv, L.flatten(alpha, K));
        auto bcoords = mat_apply(*Pinv, L.flatten(beta, K));
        return PrimitiveElement{gamma, g, flat, flat.unflatten(acoords, K),
                                flat.unflatten(bcoords, K), (long long)ci};
    }
    throw internal_error("primitive element scan exhausted its bound");
}

// ---------------------------------------------------------------------------
// Embeddings and automorphisms.

/// A K-embedding of one tower into another, represented by the image of a
/// primitive generator; application goes through gamma-power coordinates.
class Embedding {
  public:
    Embedding(Field from, Field to, Field common, Value gamma, Value image, Mat to_gamma_coords)
        : from_(std::move(from)), to_(std::move(to)), common_(std::move(common)),
          gamma_(std::move(gamma)), image_(std::move(image)), inv_coords_(std::move(to_gamma_coords)) {}

    const Field& from() const { return from_; }
    const Field& to() const { return to_; }
    const Value& generator_image() const { return image_; }
    const Value& primitive_generator() const { return gamma_; }

    Value apply(const Value& v) const {
        auto coords = mat_apply(inv_coords_, from_.flatten(v, common_));
        // Horner in the image
        Value r = to_.zero();
        for (std::size_t i = coords.size(); i-- > 0;)
            r = to_.add(to_.mul(r, image_), to_.lift_from(common_, coords[i]));
        return r;
    }

    friend bool operator==(const Embedding& a, const Embedding& b) {
        return a.from_.same_field(b.from_) && a.to_.same_field(b.to_) && a.image_ == b.image_;
    }

  private:
    Field from_, to_, common_;
    Value gamma_;  // primitive generator of from_ over common_
    Value image_;  // its image in to_
    Mat inv_coords_;
};

namespace detail {

/// Deterministic sample values for ring-map spot checks.
inline std::vector<Value> sample_values(const Field& L, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Value> out;
    if (auto sz = L.size()) {
        for (std::size_t i = 0; i < count; ++i) {
            BigInt idx = 0;
            BigInt scale = 1;
            while (scale < *sz) {
                idx = (idx << 64) + rng();
                scale <<= 64;
            }
            out.push_back(L.element_by_index(idx % *sz));
        }
        return out;
    }
    // infinite field: random small combinations of the power basis, with
    // coordinates that are exact in the base (small rationals, or small
    // t-polynomials when the base is a rational function field)
    Field B = L.base_field();
    std::size_t n = L.degree_over(B);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Value> coords;
        for (std::size_t j = 0; j < n; ++j) {
            if (B.base() == BaseKind::RationalFunctions) {
                Value c = B.from_int((long long)(rng() % B.characteristic()));
                Value d = B.from_int((long long)(rng() % B.characteristic()));
                coords.push_back(B.add(c, B.mul(d, B.t_generator())));
            } else {
                long long num = (long long)(rng() % 21) - 10;
                long long den = 1 + (long long)(rng() % 4);
                coords.push_back(B.from_rational(Rational(num, den)));
            }
        }
        out.push_back(L.unflatten(coords, B));
    }
    return out;
}

/// Flattening data for a tower over K: a primitive gamma, its minimal
/// polynomial, and the inverse power-basis matrix.
struct TowerFlattening {
    Value gamma;
    Poly g; // min poly of gamma over K
    Mat inv; // flatten-over-K coords -> gamma-power coords
};

inline TowerFlattening flatten_tower(const Field& L, const Field& K) {
    std::size_t added = L.levels_used() - K.levels_used();
    std::size_t n = L.degree_over(K);
    Value gamma;
    if (added == 0) {
        gamma = L.one(); // K itself; the only embedding datum is trivial
    } else if (added == 1) {
        gamma = L.generator();
    } else {
        // a multi-step tower with an inseparable level may fail to be simple,
        // so the shift scan below would have nothing to find
        for (std::size_t lev = K.levels_used() + 1; lev <= L.levels_used(); ++lev) {
            Field at = L.at_level(lev);
            if (derivative(Poly(at.subfield(), at.level_modulus())).is_zero())
                throw capability_error("flattening a multi-step tower needs separable levels");
        }
        // fold the levels two at a time through primitive_element on the
        // original tower: compute gamma directly in L by rescanning shifts
        gamma = L.lift_from(L.at_level(K.levels_used() + 1), L.at_level(K.levels_used() + 1).generator());
        for (std::size_t lev = K.levels_used() + 2; lev <= L.levels_used(); ++lev) {
            Field at = L.at_level(lev);
            Value beta = L.lift_from(at, at.generator());
            std::size_t partial = at.degree_over(K);
            std::optional<BigInt> ks = K.size();
            bool found = false;
            for (std::size_t ci = 0; ci <= 2 * partial * partial; ++ci) {
                Value c;
                if (ks) {
                    if (BigInt(ci) >= *ks) break;
                    c = K.element_by_index(BigInt(ci));
                } else {
                    c = K.from_int((long long)ci);
                }
                Value cand = L.add(gamma, L.mul(beta, L.lift_from(K, c)));
                if (std::size_t(min_poly(L, cand, K).deg()) == partial) {
                    gamma = cand;
                    found = true;
                    break;
                }
            }
            if (!found) throw internal_error("primitive element scan exhausted its bound");
        }
    }
    Poly g = min_poly(L, gamma, K);
    if (std::size_t(g.deg()) != n) throw internal_error("flattening lost degree");
    Mat P = gamma_power_matrix(L, gamma, K, n);
    auto Pinv = mat_inverse(P);
    if (!Pinv) throw internal_error("gamma powers do not form a basis despite full degree");
    return {gamma, std::move(g), std::move(*Pinv)};
}

} // namespace detail

/// All K-embeddings of L into M, one per root in M of L's primitive minimal
/// polynomial.  Each map is spot-checked as a ring homomorphism before being
/// returned.
inline std::vector<Embedding> embeddings(const Field& L, const Field& M, const Field& K) {
    L.require_prefix(K);
    M.require_prefix(K);
    if (L.has_infinite_step() || M.has_infinite_step())
        throw capability_error("embeddings need finite towers");
    auto fl = detail::flatten_tower(L, K);
    std::vector<Embedding> out;
    std::vector<Value> roots;
    if (L.levels_used() == K.levels_used()) {
        roots.push_back(M.one()); // gamma = 1; the unique K-embedding of K
    } else {
        roots = roots_in_field(fl.g, M);
    }
    for (const auto& r : roots) {
        Embedding e(L, M, K, fl.gamma, r, fl.inv);
        // ring-map spot check, loud on failure
        auto xs = detail::sample_values(L, 4, 0xE1BED);
        auto ys = detail::sample_values(L, 4, 0x5EED2);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!(e.apply(L.mul(xs[i], ys[i])) == M.mul(e.apply(xs[i]), e.apply(ys[i]))) ||
                !(e.apply(L.add(xs[i], ys[i])) == M.add(e.apply(xs[i]), e.apply(ys[i]))))
                throw internal_error("embedding failed its ring-map spot check");
        }
        if (!(e.apply(L.one()) == M.one()))
            throw internal_error("embedding does not preserve 1");
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [&](const Embedding& a, const Embedding& b) {
        return M.cmp(a.generator_image(), b.generator_image()) < 0;
    });
    return out;
}

/// Automorphism group with composition table (elements sorted by generator
/// image; `identity` holds the index of the identity map).
struct GroupTable {
    std::vector<Embedding> elements;
    std::vector<std::vector<std::size_t>> compose; // compose[i][j] = sigma_i o sigma_j
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
    std::vector<std::size_t> element_order;
    std::string group_name;

    std::size_t order() const { return elements.size(); }
};

namespace detail {

inline std::string identify_group(std::size_t n, std::vector<std::size_t> orders) {
    std::sort(orders.begin(), orders.end());
    auto is = [&](std::initializer_list<std::size_t> l) {
        return orders == std::vector<std::size_t>(l);
    };
    switch (n) {
        case 1: return "C1";
        case 2: return "C2";
        case 3: return "C3";
        case 4:
            if (is({1, 2, 4, 4})) return "C4";
            if (is({1, 2, 2, 2})) return "C2xC2";
            break;
        case 5: return "C5";
        case 6:
            if (is({1, 2, 3, 3, 6, 6})) return "C6";
            if (is({1, 2, 2, 2, 3, 3})) return "S3";
            break;
        case 7: return "C7";
        case 8:
            if (is({1, 2, 4, 4, 8, 8, 8, 8})) return "C8";
            if (is({1, 2, 2, 2, 4, 4, 4, 4})) return "C4xC2";
            if (is({1, 2, 2, 2, 2, 2, 2, 2})) return "C2xC2xC2";
            if (is({1, 2, 2, 2, 2, 2, 4, 4})) return "D4";
            if (is({1, 2, 4, 4, 4, 4, 4, 4})) return "Q8";
            break;
        case 9:
            if (is({1, 3, 3, 9, 9, 9, 9, 9, 9})) return "C9";
            if (is({1, 3, 3, 3, 3, 3, 3, 3, 3})) return "C3xC3";
            break;
        case 10:
            if (is({1, 2, 5, 5, 5, 5, 10, 10, 10, 10})) return "C10";
            if (is({1, 2, 2, 2, 2, 2, 5, 5, 5, 5})) return "D5";
            break;
        case 11: return "C11";
        case 12:
            if (is({1, 2, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12})) break; // not a valid multiset
            if (is({1, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12, 12})) return "C12";
            if (is({1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6})) return "C6xC2";
            if (is({1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6})) return "D6";
            if (is({1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3})) return "A4";
            if (is({1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6})) return "Dic3";
            break;
        default: break;
    }
    return "unidentified";
}

} // namespace detail

/// All K-automorphisms of L, with composition table, inverses, element
/// orders, and a small-group identification.
inline GroupTable automorphisms(const Field& L, const Field& K) {
    GroupTable t;
    t.elements = embeddings(L, L, K);
    std::size_t n = t.elements.size();
    // locate the identity: image == gamma
    t.identity = n;
    for (std::size_t i = 0; i < n; ++i)
        if (t.elements[i].generator_image() == t.elements[i].primitive_generator()) t.identity = i;
    if (t.identity == n) throw internal_error("automorphism set lacks the identity");
    t.compose.assign(n, std::vector<std::size_t>(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // (sigma_i o sigma_j)(gamma) = sigma_i(sigma_j(gamma))
            Value img = t.elements[i].apply(t.elements[j].generator_image());
            std::size_t found = n;
            for (std::size_t m = 0; m < n; ++m)
                if (t.elements[m].generator_image() == img) found = m;
            if (found == n) throw internal_error("automorphism composition escaped the group");
            t.compose[i][j] = found;
        }
    t.inverse.assign(n, n);
    t.element_order.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (t.compose[i][j] == t.identity) t.inverse[i] = j;
        std::size_t cur = i, ord = 1;
        while (cur != t.identity) {
            cur = t.compose[i][cur];
            ++ord;
            if (ord > n) throw internal_error("element order exceeds group order");
        }
        t.element_order[i] = ord;
    }
    t.group_name = detail::identify_group(n, t.element_order);
    return t;
}

// ---------------------------------------------------------------------------
// Fixed fields.

struct FixedField {
    Field field;            // K(delta) or K itself
    bool equals_K = false;
    Value primitive_in_L;   // delta as an element of L
    Poly min_poly_over_K;   // its minimal polynomial
    std::size_t degree_over_K = 1;
};

/// L^H for a subset H (by index) of the automorphism group; H is closed under
/// composition or this throws.  The fixed subspace is the joint kernel of
/// (sigma - id) over K; a primitive element for it is found by a
/// deterministic small-combination scan.
inline FixedField fixed_field(const Field& L, const Field& K, const GroupTable& G,
                              const std::vector<std::size_t>& H) {
    for (auto i : H)
        for (auto j : H) {
            bool in = false;
            for (auto m : H) in = in || G.compose[i][j] == m;
            if (!in) throw domain_error("H is not closed under composition");
        }
    std::size_t n = L.degree_over(K);
    // rows: for each sigma in H, (sigma - id) applied to each basis vector
    std::vector<std::vector<Value>> rows;
    std::vector<std::vector<Value>> basis_cols;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Value> coords(n, K.zero());
        coords[j] = K.one();
        basis_cols.push_back(coords);
    }
    Mat stacked(K, H.size() * n, n);
    for (std::size_t hi = 0; hi < H.size(); ++hi) {
        const Embedding& s = G.elements[H[hi]];
        for (std::size_t j = 0; j < n; ++j) {
            Value bj = L.unflatten(basis_cols[j], K);
            auto img = L.flatten(s.apply(bj), K);
            for (std::size_t i = 0; i < n; ++i) {
                Value delta = K.sub(img[i], basis_cols[j][i]);
                stacked.at(hi * n + i, j) = delta;
            }
        }
    }
    auto kernel = mat_kernel(std::move(stacked));
    std::size_t dim = kernel.size();
    FixedField out;
    out.degree_over_K = dim;
    if (dim == 0) throw internal_error("fixed space lost the constants");
    if (dim == 1) {
        out.field = K;
        out.equals_K = true;
        out.primitive_in_L = L.lift_from(K, K.one());
        out.min_poly_over_K = Poly(K, {K.neg(K.one()), K.one()});
        return out;
    }
    // deterministic scan for a primitive element of the fixed space: integer
    // combinations sum c_i * b_i with small non-negative weights
    std::size_t bound = 2 * dim * dim + 2;
    std::vector<Value> fixed_elems;
    for (const auto& kc : kernel) fixed_elems.push_back(L.unflatten(kc, K));
    std::vector<std::size_t> weights(fixed_elems.size(), 0);
    std::size_t trials = 1;
    for (std::size_t i = 0; i < fixed_elems.size() && trials < 2000000; ++i) trials *= bound;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        // enumerate weight vectors in a mixed-radix sweep
        std::size_t x = trial;
        for (auto& w : weights) {
            w = x % bound;
            x /= bound;
        }
        Value cand = L.zero();
        for (std::size_t i = 0; i < fixed_elems.size(); ++i)
            cand = L.add(cand, L.mul_int(fixed_elems[i], (long long)weights[i]));
        Poly mp = min_poly(L, cand, K);
        if (std::size_t(mp.deg()) != dim) continue;
        out.field = K.extended_unchecked(mp.c, false);
        out.equals_K = false;
        out.primitive_in_L = cand;
        out.min_poly_over_K = mp;
        return out;
    }
    throw internal_error("fixed-field primitive scan exhausted its bound");
}

/// Convenience: indices 0..n-1 (the full group).
inline std::vector<std::size_t> full_subgroup(const GroupTable& G) {
    std::vector<std::size_t> all(G.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

// ---------------------------------------------------------------------------
// Splitting fields.

/// Smallest tower over K (built by repeatedly adjoining a root of the first
/// nonlinear irreducible factor, in sorted order) over which f splits into
/// linear factors.
inline Field splitting_field(const Poly& f, const Field& K) {
    if (f.deg() < 1) throw domain_error("splitting field needs degree >= 1");
    Field L = K;
    for (int guard = 0; guard <= f.deg(); ++guard) {
        FactorList fs = factor_over_extension(f, L);
        const Poly* nonlinear = nullptr;
        for (const auto& [g, m] : fs)
            if (g.deg() > 1) {
                nonlinear = &g;
                break;
            }
        if (!nonlinear) return L;
        L = L.extended_unchecked(nonlinear->c, false); // factor output: irreducible
    }
    throw internal_error("splitting tower failed to terminate");
}

} // namespace composita

#pragma once

// Polynomial factorization over the supported fields.
//
//   - finite fields (any tower over F_p): squarefree split, then
//     distinct-degree / equal-degree splitting with a deterministic sweep of
//     small elements before seeded randomness;
//   - rationals: squarefree split, reduction mod a good prime, Hensel lifting
//     past twice the coefficient bound, subset recombination;
//   - number fields (towers over Q): relative norm-based reduction to the
//     field below, with a generator shift to make the norm squarefree;
//   - F_p(t) towers: only the gcd-decidable shapes (p-th-power descent,
//     binomials x^p - c, Artin-Schreier degree arguments, bounded root
//     trials); everything else raises a capability error.

#include <algorithm>
#include <random>
#include <vector>

#include "composita/linalg.hpp"
#include "composita/poly.hpp"

namespace composita {

using FactorList = std::vector<std::pair<Poly, std::size_t>>;

namespace detail {

inline void sort_factors(FactorList& fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        if (int c = poly_cmp(a.first, b.first)) return c < 0;
        return a.second < b.second;
    });
}

// -- integer polynomial plumbing (for the rational case) --------------------

using ZVec = std::vector<BigInt>; // low-to-high, no trailing zeros

inline void zv_trim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline ZVec zv_mul(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline ZVec zv_sub(const ZVec& a, const ZVec& b) {
    ZVec r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    zv_trim(r);
    return r;
}

/// Division by a monic divisor; second component tells whether the division
/// was exact.
inline std::pair<ZVec, bool> zv_div_monic(ZVec a, const ZVec& b) {
    if (b.empty() || b.back() != 1) throw internal_error("zv_div_monic needs a monic divisor");
    ZVec q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, BigInt(0));
    while (a.size() >= b.size()) {
        BigInt c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        zv_trim(a);
    }
    return {std::move(q), a.empty()};
}

inline ZVec zv_mod_reduce(ZVec v, const BigInt& m) {
    for (auto& c : v) {
        c %= m;
        if (c < 0) c += m;
    }
    zv_trim(v);
    return v;
}

/// Symmetric representative: coefficients moved into (-m/2, m/2].
inline ZVec zv_symmetric(ZVec v, const BigInt& m) {
    for (auto& c : v) {
        c %= m;
        if (c < 0) c += m;
        if (2 * c > m) c -= m;
    }
    zv_trim(v);
    return v;
}

inline Poly zv_to_fp(const ZVec& v, const Field& Fp) {
    std::vector<Value> c;
    c.reserve(v.size());
    for (const auto& x : v) {
        BigInt r = x % Fp.characteristic();
        if (r < 0) r += Fp.characteristic();
        c.push_back(Value(FpElem{Fp.characteristic(), std::uint32_t(r)}));
    }
    return Poly(Fp, std::move(c));
}

inline ZVec fp_to_zv(const Poly& f) {
    ZVec v;
    v.reserve(f.c.size());
    for (const auto& x : f.c) v.push_back(BigInt(std::get<FpElem>(x.rep).r));
    return v;
}

inline BigInt bigint_isqrt_ceil(const BigInt& n) {
    if (n <= 0) return 0;
    BigInt x = 1;
    while (x * x < n) x <<= 1;
    BigInt lo = x >> 1, hi = x;
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) / 2;
        if (mid * mid < n) lo = mid;
        else hi = mid;
    }
    return hi;
}

// -- Hensel lifting ---------------------------------------------------------
// All polynomials monic.  Lifts f = g*h (mod p) to (mod p^steps-ish target).

struct HenselPair {
    ZVec g, h;
};

/// One linear lifting step: given f = g*h (mod m) with Bezout s*g + t*h = 1
/// (mod p), produces g', h' with f = g'*h' (mod m*p), g' = g (mod m).
inline HenselPair hensel_step(const ZVec& f, const ZVec& g, const ZVec& h, const Poly& s,
                              const Poly& t, const BigInt& m, const Field& Fp) {
    // e = (f - g*h)/m  (mod p)
    ZVec diff = zv_sub(f, zv_mul(g, h));
    for (auto& c : diff) {
        if (c % m != 0) throw internal_error("hensel_step: defect not divisible by modulus");
        c /= m;
    }
    Poly e = zv_to_fp(diff, Fp);
    Poly gp = zv_to_fp(g, Fp), hp = zv_to_fp(h, Fp);
    // u = t*e mod g;  v = (e - u*h)/g   (all over F_p)
    Poly u = poly_mod(t * e, gp);
    Poly v = poly_div_exact(e - u * hp, gp);
    ZVec gn = g, hn = h;
    ZVec uu = fp_to_zv(u), vv = fp_to_zv(v);
    gn.resize(std::max(gn.size(), uu.size()), BigInt(0));
    for (std::size_t i = 0; i < uu.size(); ++i) gn[i] += m * uu[i];
    hn.resize(std::max(hn.size(), vv.size()), BigInt(0));
    for (std::size_t i = 0; i < vv.size(); ++i) hn[i] += m * vv[i];
    zv_trim(gn);
    zv_trim(hn);
    return {std::move(gn), std::move(hn)};
}

/// Lifts the factorization f = prod(parts) (mod p) to (mod target), target a
/// power of p.  f and all parts monic.  Binary-tree recursion on the parts.
inline std::vector<ZVec> hensel_lift_tree(const ZVec& f, std::vector<Poly> parts, std::uint32_t p,
                                          const BigInt& target, const Field& Fp) {
    if (parts.size() == 1) return {zv_mod_reduce(f, target)};
    std::size_t half = parts.size() / 2;
    Poly G = Poly::one(Fp), H = Poly::one(Fp);
    std::vector<Poly> left(parts.begin(), parts.begin() + half);
    std::vector<Poly> right(parts.begin() + half, parts.end());
    for (const auto& q : left) G = G * q;
    for (const auto& q : right) H = H * q;
    auto [one, s, t] = poly_ext_gcd(G, H);
    if (one.deg() != 0) throw internal_error("hensel_lift_tree: factors not coprime mod p");
    ZVec g = fp_to_zv(G), h = fp_to_zv(H);
    BigInt m = p;
    while (m < target) {
        auto next = hensel_step(zv_mod_reduce(f, m * p), g, h, s, t, m, Fp);
        g = std::move(next.g);
        h = std::move(next.h);
        m *= p;
    }
    // recurse: g, h are correct mod target (>= needed bound for their factors)
    auto lg = hensel_lift_tree(zv_mod_reduce(g, target), std::move(left), p, target, Fp);
    auto lh = hensel_lift_tree(zv_mod_reduce(h, target), std::move(right), p, target, Fp);
    lg.insert(lg.end(), lh.begin(), lh.end());
    return lg;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Finite fields.

namespace detail {

/// Equal-degree splitting of a monic squarefree product of degree-d
/// irreducibles over a finite field.  Deterministic sweep of x + c for small
/// c, then seeded randomness.
inline void edf(const Poly& f, std::size_t d, std::vector<Poly>& out) {
    const Field& L = f.k;
    if (std::size_t(f.deg()) == d) {
        out.push_back(f);
        return;
    }
    BigInt q = *L.size();
    bool even = L.characteristic() == 2;
    // number of Frobenius applications for the char-2 trace map
    std::size_t k2 = 0;
    if (even) {
        BigInt t = q;
        while (t > 1) {
            t >>= 1;
            ++k2;
        }
    }
    std::mt19937_64 rng(0xC0FFEE);
    BigInt sweep_limit = std::min<BigInt>(q, 64);
    for (std::size_t attempt = 0;; ++attempt) {
        Poly a = Poly::zero(L);
        if (BigInt(attempt) < sweep_limit) {
            a = Poly(L, {L.element_by_index(BigInt(attempt)), L.one()}); // x + c
        } else {
            std::size_t deg = 1 + attempt % std::size_t(f.deg());
            std::vector<Value> c;
            BigInt qq = q;
            for (std::size_t i = 0; i <= deg; ++i) {
                BigInt idx = 0;
                // build a random index below q from 64-bit chunks
                BigInt scale = 1;
                while (scale < qq) {
                    idx = (idx << 64) + rng();
                    scale <<= 64;
                }
                c.push_back(L.element_by_index(idx % qq));
            }
            a = Poly(L, std::move(c));
            if (a.deg() < 1) continue;
        }
        Poly g0 = poly_gcd(f, a);
        if (g0.deg() > 0 && g0.deg() < f.deg()) {
            edf(g0, d, out);
            edf(poly_div_exact(f, g0), d, out);
            return;
        }
        Poly b = Poly::zero(L);
        if (!even) {
            BigInt e = 1;
            for (std::size_t i = 0; i < d; ++i) e *= q;
            b = poly_pow_mod(a, (e - 1) / 2, f);
            b = b - Poly::one(L);
        } else {
            Poly tr = poly_mod(a, f), pw = poly_mod(a, f);
            for (std::size_t i = 1; i < k2 * d; ++i) {
                pw = poly_pow_mod(pw, 2, f);
                tr = tr + pw;
            }
            b = tr;
        }
        if (b.is_zero()) continue;
        Poly g = poly_gcd(f, b);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf(g, d, out);
            edf(poly_div_exact(f, g), d, out);
            return;
        }
        if (attempt > 4096) throw internal_error("equal-degree splitting failed to converge");
    }
}

/// Monic squarefree polynomial over a finite field -> monic irreducible factors.
inline std::vector<Poly> ff_factor_squarefree(Poly f) {
    const Field& L = f.k;
    BigInt q = *L.size();
    std::vector<Poly> out;
    Poly h = poly_mod(Poly::x(L), f); // x^(q^d) mod current f, maintained below
    std::size_t d = 0;
    while (f.deg() > 0) {
        ++d;
        if (2 * d > std::size_t(f.deg())) {
            out.push_back(f); // what remains is irreducible
            break;
        }
        h = poly_pow_mod(h, q, f);
        Poly g = poly_gcd(f, h - Poly::x(L));
        if (g.deg() > 0) {
            edf(g, d, out);
            f = poly_div_exact(f, g);
            h = poly_mod(h, f);
        }
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Rationals.

namespace detail {

/// Factors a monic squarefree integer polynomial into monic irreducible
/// integer polynomials (Zassenhaus).
inline std::vector<ZVec> factor_monic_int_squarefree(const ZVec& F) {
    std::size_t n = F.size() - 1;
    if (n == 1) return {F};

    // prime keeping F squarefree mod p
    std::uint32_t p = 0;
    Field Fp;
    Poly fp;
    for (std::uint32_t cand = 3;; cand += 2) {
        if (!is_prime_u32(cand)) continue;
        Field K = Field::prime(cand);
        Poly g = zv_to_fp(F, K);
        if (g.deg() != int(n)) continue; // cannot happen for monic, kept for clarity
        if (poly_gcd(g, derivative(g)).deg() == 0) {
            p = cand;
            Fp = K;
            fp = g;
            break;
        }
        if (cand > 10000) throw internal_error("no squarefree-preserving prime found");
    }

    std::vector<Poly> modular = ff_factor_squarefree(fp.monic());
    if (modular.size() == 1) return {F};
    std::sort(modular.begin(), modular.end(), [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; });

    // coefficient bound for monic divisors: 2^n * ||F||_2, doubled for the
    // symmetric representation
    BigInt norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    BigInt bound = (BigInt(1) << n) * bigint_isqrt_ceil(norm2);
    BigInt target = p;
    while (target <= 2 * bound) target *= p;

    std::vector<ZVec> lifted = hensel_lift_tree(zv_mod_reduce(F, target), modular, p, target, Fp);

    // subset recombination
    std::vector<ZVec> out;
    ZVec rest = F;
    std::vector<ZVec> pool = lifted;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        // iterate over index combinations of the given size
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        bool advanced_outer = false;
        for (;;) {
            ZVec prod{BigInt(1)};
            for (auto i : idx) prod = zv_mod_reduce(zv_mul(prod, pool[i]), target);
            prod = zv_symmetric(prod, target);
            auto [quot, exact] = zv_div_monic(rest, prod);
            if (exact) {
                out.push_back(prod);
                rest = quot;
                std::vector<ZVec> next_pool;
                for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_pool.push_back(pool[i]);
                }
                pool = std::move(next_pool);
                advanced_outer = true;
                break; // restart combinations at the same size
            }
            // next combination
            std::size_t i = size;
            while (i > 0) {
                --i;
                if (idx[i] != i + pool.size() - size) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    advanced_outer = false;
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
            if (size == 0) break;
        }
        if (!advanced_outer) ++size;
    }
    if (rest.size() > 1) out.push_back(rest);
    return out;
}

/// Monic squarefree polynomial over Q -> monic irreducible factors over Q.
inline std::vector<Poly> q_factor_squarefree(const Poly& g) {
    const Field& Q = g.k;
    if (g.deg() == 1) return {g};
    // scale x -> x/l with l = lcm of coefficient denominators of g, making
    // G(x) = l^n g(x/l) integral and monic
    std::size_t n = g.deg();
    BigInt l = 1;
    for (const auto& v : g.c) {
        const auto& q = std::get<Rational>(v.rep);
        BigInt d = denominator(q);
        l = l / gcd(l, d) * d;
    }
    ZVec G(n + 1);
    BigInt power = 1; // l^(n-i)
    for (std::size_t i = n + 1; i-- > 0;) {
        const auto& q = std::get<Rational>(g.c[i].rep);
        BigInt scaled_num = numerator(q) * power;
        BigInt den = denominator(q);
        if (scaled_num % den != 0) throw internal_error("denominator clearing failed");
        G[i] = scaled_num / den;
        power *= l;
    }
    auto ints = factor_monic_int_squarefree(G);
    // map back: h(x) = H(l*x) / l^deg H, then take the monic rational poly
    std::vector<Poly> out;
    for (const auto& H : ints) {
        std::vector<Value> c(H.size());
        BigInt lp = 1;
        for (std::size_t i = 0; i < H.size(); ++i) {
            c[i] = Value(Rational(H[i] * lp));
            lp *= l;
        }
        out.push_back(Poly(Q, std::move(c)).monic());
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Number fields (towers over Q): relative norm-based reduction.

namespace detail {

FactorList factor_impl(const Poly& f, bool t_slices); // forward

/// Norm of g from L = K(alpha) down to K: the resultant in the adjoined
/// variable, computed by evaluation at integer points and Lagrange
/// interpolation (valid in characteristic zero).
inline Poly relative_norm(const Poly& g, const Field& L) {
    Field K = L.subfield();
    std::size_t dm = L.level_degree();
    Poly m(K, L.level_modulus());
    std::size_t D = dm * std::size_t(g.deg());
    // coefficients of g as polynomials in the generator over K
    std::vector<Poly> coeff_polys;
    for (const auto& v : g.c) {
        const auto& e = std::get<ExtVec>(v.rep);
        coeff_polys.push_back(Poly(K, e.c));
    }
    std::vector<Value> nodes, values;
    for (std::size_t j = 0; j <= D; ++j) {
        Value node = K.from_int((long long)j);
        // U(y) = sum_i coeff_i(y) * node^i  (Horner in the x direction)
        Poly U = Poly::zero(K);
        for (std::size_t i = coeff_polys.size(); i-- > 0;)
            U = U.scaled(node) + coeff_polys[i];
        Value val = U.is_zero() ? K.zero() : resultant(m, U);
        nodes.push_back(node);
        values.push_back(val);
    }
    // Lagrange interpolation over K
    Poly N = Poly::zero(K);
    for (std::size_t j = 0; j <= D; ++j) {
        Poly basis = Poly::one(K);
        Value denom = K.one();
        for (std::size_t i = 0; i <= D; ++i) {
            if (i == j) continue;
            basis = basis * Poly(K, {K.neg(nodes[i]), K.one()});
            denom = K.mul(denom, K.sub(nodes[j], nodes[i]));
        }
        N = N + basis.scaled(K.mul(values[j], K.inv(denom)));
    }
    if (N.deg() != int(D)) throw internal_error("norm has unexpected degree");
    return N;
}

/// Monic squarefree g over a number-field tower L -> monic irreducible factors.
inline std::vector<Poly> nf_factor_squarefree(const Poly& g, const Field& L) {
    if (g.deg() == 1) return {g};
    Field K = L.subfield();
    Value alpha = L.generator();
    for (long long s = 0; s <= 10 * (g.deg() + 1) * int(L.level_degree()); ++s) {
        // shift x -> x - s*alpha
        Value sa = L.mul_int(alpha, s);
        Poly gs = poly_compose(g, Poly(L, {L.neg(sa), L.one()}));
        Poly N = relative_norm(gs, L);
        if (poly_gcd(N, derivative(N)).deg() != 0) continue;
        FactorList nf = factor_impl(N, false);
        std::vector<Poly> out;
        for (const auto& [Ni, mult] : nf) {
            if (mult != 1) throw internal_error("squarefree norm with repeated factor");
            Poly h = poly_gcd(gs, lift_poly(Ni, L));
            if (h.deg() == 0) throw internal_error("norm factor with trivial gcd");
            // unshift x -> x + s*alpha
            out.push_back(poly_compose(h, Poly(L, {sa, L.one()})).monic());
        }
        return out;
    }
    throw internal_error("no squarefree shift found for the relative norm");
}

} // namespace detail

// ---------------------------------------------------------------------------
// F_p(t) towers: the gcd-decidable shapes only.

namespace detail {

FactorList t_slice_factor(const Poly& f);

/// Bounded root trial over an F_p(t) tower: small prime-field constants and
/// generator translates.
inline std::vector<Value> t_root_candidates(const Field& L) {
    std::vector<Value> cands;
    std::uint32_t p = L.characteristic();
    for (std::uint32_t c = 0; c < p; ++c) cands.push_back(L.from_int(c));
    for (std::size_t lev = 1; lev <= L.levels_used(); ++lev) {
        Value gen = L.lift_from(L.at_level(lev), L.at_level(lev).generator());
        for (std::uint32_t c = 0; c < p; ++c)
            cands.push_back(L.add(gen, L.from_int(c)));
    }
    // the transcendental t and its translates
    Value t = L.t_generator();
    for (std::uint32_t c = 0; c < p; ++c) cands.push_back(L.add(t, L.from_int(c)));
    return cands;
}

inline void t_merge(FactorList& into, const Poly& fac, std::size_t mult) {
    for (auto& [g, m] : into) {
        if (g == fac) {
            m += mult;
            return;
        }
    }
    into.emplace_back(fac, mult);
}

inline FactorList t_slice_factor(const Poly& f0) {
    const Field& L = f0.k;
    std::uint32_t p = L.characteristic();
    Poly f = f0.monic();
    FactorList out;
    if (f.deg() == 0) return out;
    if (f.deg() == 1) {
        out.emplace_back(f, 1);
        return out;
    }

    Poly fp = derivative(f);
    if (fp.is_zero()) {
        // f = h(x^p); with coefficient roots this is an exact p-th power
        std::vector<Value> hc, roots;
        for (std::size_t i = 0; i < f.c.size(); i += p) hc.push_back(f.c[i]);
        bool all = true;
        for (const auto& c : hc) {
            auto r = p_th_root(L, c);
            if (!r) {
                all = false;
                break;
            }
            roots.push_back(std::move(*r));
        }
        if (all) {
            FactorList inner = t_slice_factor(Poly(L, std::move(roots)));
            for (auto& [g, m] : inner) t_merge(out, g, m * p);
            return out;
        }
        // binomial x^p - c with c outside the p-th powers: irreducible
        if (hc.size() == 2 && L.is_one(hc[1])) {
            out.emplace_back(f, 1);
            return out;
        }
        throw capability_error("factorization over F_p(t) towers is limited to gcd-decidable cases");
    }

    Poly g = poly_gcd(f, fp);
    if (g.deg() > 0) {
        FactorList a = t_slice_factor(g);
        FactorList b = t_slice_factor(poly_div_exact(f, g));
        for (auto& [h, m] : a) t_merge(out, h, m);
        for (auto& [h, m] : b) t_merge(out, h, m);
        return out;
    }

    // f squarefree and separable here; try the bounded root trial
    Poly rem = f;
    for (const auto& cand : t_root_candidates(L)) {
        while (rem.deg() > 0 && L.is_zero(rem.eval(cand))) {
            t_merge(out, Poly(L, {L.neg(cand), L.one()}), 1);
            rem = poly_div_exact(rem, Poly(L, {L.neg(cand), L.one()}));
        }
    }
    if (rem.deg() == 0) return out;
    if (rem.deg() == 1) {
        t_merge(out, rem.monic(), 1);
        return out;
    }

    // Artin-Schreier shape x^p - x - c with polynomial c of degree >= 1 not
    // divisible by p: any root in F_p(t) would be a polynomial a with
    // deg(a^p - a) a positive multiple of p, so none exists there.  The
    // conclusion transfers to L only when no separable elements beyond the
    // base can be hiding, i.e. when L is the base itself or a purely
    // inseparable tower (binomial levels x^(p^k) - beta).
    if (rem.deg() == int(p)) {
        bool shape = L.is_one(rem.at(p)) && L.eq(rem.at(1), L.neg(L.one()));
        for (std::size_t i = 2; i < p && shape; ++i)
            if (!L.is_zero(rem.at(i))) shape = false;
        bool insep_tower = true;
        for (std::size_t lev = 1; lev <= L.levels_used() && insep_tower; ++lev) {
            Field at = L.at_level(lev);
            const auto& mod = at.level_modulus();
            std::size_t d = mod.size() - 1;
            bool power_of_p = d >= p;
            for (std::size_t dd = d; power_of_p && dd > 1; dd /= p)
                if (dd % p != 0) power_of_p = false;
            for (std::size_t i = 1; i < d && power_of_p; ++i)
                if (!at.subfield().is_zero(mod[i])) power_of_p = false;
            if (!power_of_p) insep_tower = false;
        }
        if (shape && insep_tower) {
            Value c = L.neg(rem.at(0));
            auto base = L.base_field();
            if (auto low = L.lower_to(c, base)) {
                const auto& tr = std::get<TRat>(low->rep);
                bool is_poly = tv_deg(tr.den) == 0;
                int dnum = tv_deg(tr.num);
                if (is_poly && dnum >= 1 && dnum % int(p) != 0) {
                    t_merge(out, rem, 1);
                    return out;
                }
            }
        }
    }

    throw capability_error("factorization over F_p(t) towers is limited to gcd-decidable cases");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Dispatch.

namespace detail {

inline FactorList factor_impl(const Poly& f, bool t_slices) {
    if (f.is_zero() || f.deg() < 1) throw domain_error("factorization needs degree >= 1");
    const Field& L = f.k;
    if (L.base() == BaseKind::RationalFunctions) {
        if (!t_slices) throw capability_error("factorization over F_p(t) is not supported");
        FactorList out = t_slice_factor(f);
        sort_factors(out);
        return out;
    }
    FactorList out;
    if (L.base() == BaseKind::Prime) {
        for (const auto& [g, m] : squarefree_decomposition(f))
            for (const auto& h : ff_factor_squarefree(g))
                out.emplace_back(h, m);
    } else if (L.is_base()) {
        for (const auto& [g, m] : squarefree_decomposition(f))
            for (const auto& h : q_factor_squarefree(g))
                out.emplace_back(h, m);
    } else {
        for (const auto& [g, m] : squarefree_decomposition(f))
            for (const auto& h : nf_factor_squarefree(g, L))
                out.emplace_back(h, m);
    }
    sort_factors(out);
    return out;
}

} // namespace detail

/// Complete factorization into monic irreducibles with multiplicities;
/// multiplying them back (times the leading coefficient) recovers f.
/// Supported over any tower with base Q or F_p; F_p(t) raises a capability
/// error.
inline FactorList factor(const Poly& f) { return detail::factor_impl(f, false); }

/// Factorization of f (given over a subfield K) over the extension L.  For
/// F_p(t) towers only the gcd-decidable shapes are handled.
inline FactorList factor_over_extension(const Poly& f, const Field& L) {
    return detail::factor_impl(lift_poly(f, L), true);
}

/// True iff f is irreducible over its coefficient field.  Over F_p(t) the
/// decidable shapes are used; others raise a capability error.
inline bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) return false;
    FactorList fs = f.k.base() == BaseKind::RationalFunctions ? detail::t_slice_factor(f)
                                                              : detail::factor_impl(f, false);
    return fs.size() == 1 && fs[0].second == 1;
}

/// Roots of f in L (each once, sorted), found from the linear factors.
inline std::vector<Value> roots_in_field(const Poly& f, const Field& L) {
    std::vector<Value> roots;
    for (const auto& [g, m] : factor_over_extension(f, L))
        if (g.deg() == 1) roots.push_back(L.neg(g.at(0)));
    std::sort(roots.begin(), roots.end(), [&](const Value& a, const Value& b) { return L.cmp(a, b) < 0; });
    return roots;
}

} // namespace composita

#pragma once

// Univariate polynomials over any supported field, plus the gcd / derivative /
// resultant / squarefree toolkit that the separability and normality decisions
// are built on.  Factorization is in factor.hpp.

#include <optional>
#include <tuple>
#include <vector>

#include "composita/fields.hpp"

namespace composita {

/// Dense univariate polynomial; coefficients low-to-high with no trailing
/// zeros (empty vector = the zero polynomial).
struct Poly {
    Field k;
    std::vector<Value> c;

    Poly() = default;
    explicit Poly(Field field) : k(std::move(field)) {}
    Poly(Field field, std::vector<Value> coeffs) : k(std::move(field)), c(std::move(coeffs)) {
        detail::vec_trim(k, c);
    }

    static Poly zero(const Field& k) { return Poly(k); }
    static Poly one(const Field& k) { return Poly(k, {k.one()}); }
    static Poly x(const Field& k) { return Poly(k, {k.zero(), k.one()}); }
    static Poly constant(const Field& k, Value v) { return Poly(k, {std::move(v)}); }

    /// c * x^n
    static Poly monomial(const Field& k, Value coeff, std::size_t n) {
        std::vector<Value> v(n + 1, k.zero());
        v[n] = std::move(coeff);
        return Poly(k, std::move(v));
    }

    int deg() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    const Value& lc() const {
        if (c.empty()) throw domain_error("zero polynomial has no leading coefficient");
        return c.back();
    }

    /// Coefficient of x^i (zero beyond the degree).
    Value at(std::size_t i) const { return i < c.size() ? c[i] : k.zero(); }

    bool is_monic() const { return !c.empty() && k.is_one(c.back()); }

    Poly monic() const {
        if (c.empty()) throw domain_error("cannot normalize the zero polynomial");
        if (is_monic()) return *this;
        return Poly(k, detail::vec_scale(k, c, k.inv(c.back())));
    }

    Value eval(const Value& x) const { return detail::vec_eval(k, c, x); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.k.require_same(b.k);
        return Poly(a.k, detail::vec_add(a.k, a.c, b.c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.k.require_same(b.k);
        return Poly(a.k, detail::vec_sub(a.k, a.c, b.c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.k.require_same(b.k);
        return Poly(a.k, detail::vec_mul(a.k, a.c, b.c));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<Value> r;
        r.reserve(a.c.size());
        for (const auto& v : a.c) r.push_back(a.k.neg(v));
        return Poly(a.k, std::move(r));
    }

    Poly scaled(const Value& s) const { return Poly(k, detail::vec_scale(k, c, s)); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

/// Quotient and remainder: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    a.k.require_same(b.k);
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    auto [q, r] = detail::vec_divmod(a.k, a.c, b.c);
    return {Poly(a.k, std::move(q)), Poly(a.k, std::move(r))};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }
inline Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw internal_error("expected exact polynomial division");
    return q;
}

/// Monic gcd (Euclid).  gcd(0, 0) is an error.
inline Poly poly_gcd(Poly a, Poly b) {
    a.k.require_same(b.k);
    if (a.is_zero() && b.is_zero()) throw domain_error("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// (g, s, t) with s*a + t*b = g and g the monic gcd.
inline std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
    a.k.require_same(b.k);
    auto [g, s, t] = detail::vec_ext_gcd(a.k, a.c, b.c);
    return {Poly(a.k, std::move(g)), Poly(a.k, std::move(s)), Poly(a.k, std::move(t))};
}

/// Formal derivative; in characteristic p the usual cancellations happen.
inline Poly derivative(const Poly& f) {
    if (f.c.size() <= 1) return Poly::zero(f.k);
    std::vector<Value> r;
    r.reserve(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i)
        r.push_back(f.k.mul_int(f.c[i], (long long)i));
    return Poly(f.k, std::move(r));
}

/// f(g(x)).
inline Poly poly_compose(const Poly& f, const Poly& g) {
    Poly r = Poly::zero(f.k);
    for (std::size_t i = f.c.size(); i-- > 0;)
        r = r * g + Poly::constant(f.k, f.c[i]);
    return r;
}

/// f(x + a).
inline Poly poly_shift(const Poly& f, const Value& a) {
    return poly_compose(f, Poly(f.k, {a, f.k.one()}));
}

/// base^e mod m (binary powering); m must be nonconstant.
inline Poly poly_pow_mod(Poly base, BigInt e, const Poly& m) {
    if (m.deg() < 1) throw internal_error("poly_pow_mod needs a nonconstant modulus");
    base = poly_mod(base, m);
    Poly r = poly_mod(Poly::one(m.k), m);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mod(r * base, m);
        base = poly_mod(base * base, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic total order: by degree, then coefficients from the highest
/// power down.  Used to sort factor lists for reproducible output.
inline int poly_cmp(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (int c = a.k.cmp(a.c[i], b.c[i])) return c;
    return 0;
}

/// Coefficient-wise embedding of a polynomial over a subfield into L[x].
inline Poly lift_poly(const Poly& f, const Field& L) {
    L.require_prefix(f.k);
    std::vector<Value> c;
    c.reserve(f.c.size());
    for (const auto& v : f.c) c.push_back(L.lift_from(f.k, v));
    return Poly(L, std::move(c));
}

/// Rewrites f over the subfield K when every coefficient lies there.
inline std::optional<Poly> lower_poly(const Poly& f, const Field& K) {
    f.k.require_prefix(K);
    std::vector<Value> c;
    c.reserve(f.c.size());
    for (const auto& v : f.c) {
        auto low = f.k.lower_to(v, K);
        if (!low) return std::nullopt;
        c.push_back(std::move(*low));
    }
    return Poly(K, std::move(c));
}

// ---------------------------------------------------------------------------
// Resultants.
//
// Convention: res(a, b) = lc(a)^deg(b) * prod over roots r of a (with
// multiplicity, in a splitting field) of b(r).  Computed by a Euclidean
// reduction, never by building the Sylvester matrix:
//   res(a, b) = lc(a)^(deg b - deg r) * (-1)^(deg a * deg r) * res(r, a)
// where r = b mod a.

inline Value resultant(const Poly& a, const Poly& b) {
    a.k.require_same(b.k);
    if (a.is_zero() || b.is_zero()) throw domain_error("resultant of the zero polynomial");
    const Field& k = a.k;
    Value acc = k.one();
    Poly f = a, g = b;
    for (;;) {
        if (f.deg() == 0) return k.mul(acc, k.pow(f.lc(), g.deg()));
        Poly r = poly_mod(g, f);
        if (r.is_zero()) return k.zero(); // common factor of positive degree
        acc = k.mul(acc, k.pow(f.lc(), g.deg() - r.deg()));
        if ((std::size_t(f.deg()) * std::size_t(r.deg())) % 2 == 1) acc = k.neg(acc);
        g = std::move(f);
        f = std::move(r);
    }
}

// ---------------------------------------------------------------------------
// p-th roots and perfectness.

/// True iff every element of the field has a p-th root (vacuously true in
/// characteristic zero).  A finite extension of an imperfect field is again
/// imperfect, so towers over F_p(t) are always imperfect.
inline bool is_perfect(const Field& k) {
    return k.base() != BaseKind::RationalFunctions;
}

namespace detail {

/// p-th root in F_p(t): exists iff every exponent carrying a nonzero
/// coefficient is divisible by p (coefficients in F_p are their own p-th
/// roots).
inline std::optional<TVec> tv_p_root(const TVec& v, std::uint32_t p) {
    TVec r;
    if (v.empty()) return r;
    r.assign((v.size() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (i % p != 0) return std::nullopt;
        r[i / p] = v[i];
    }
    return r;
}

} // namespace detail

/// p-th root of v in k, if one exists there.  Supported shapes: any finite
/// field; F_p(t) itself; and a degree-p level x^p - t directly over F_p(t)
/// (the purely inseparable tower used throughout).  Other imperfect towers
/// raise a capability error.
inline std::optional<Value> p_th_root(const Field& k, const Value& v) {
    std::uint32_t p = k.characteristic();
    if (p == 0) throw internal_error("p_th_root called in characteristic zero");
    if (k.base() == BaseKind::Prime) {
        BigInt q = *k.size();
        return k.pow(v, q / p); // Frobenius is bijective on finite fields
    }
    // imperfect territory
    if (k.is_base()) {
        const auto& x = std::get<TRat>(v.rep);
        auto rn = detail::tv_p_root(x.num, p);
        auto rd = detail::tv_p_root(x.den, p);
        if (!rn || !rd) return std::nullopt;
        return Value(detail::tr_make(p, std::move(*rn), std::move(*rd)));
    }
    // try the element as a base-field value first
    Field base = k.base_field();
    if (auto low = k.lower_to(v, base)) {
        if (k.levels_used() == 1) {
            // one level x^p - t over F_p(t): M^p is exactly F_p(t), and the
            // root of c in M comes from splitting c over the subfield F_p(t^p)
            // with basis 1, t, ..., t^{p-1}.
            const auto& mod = k.level_modulus();
            bool shape = mod.size() == p + 1;
            if (shape) {
                for (std::size_t i = 1; i < p; ++i)
                    if (!base.is_zero(mod[i])) shape = false;
                if (!base.eq(mod[0], base.neg(base.t_generator()))) shape = false;
            }
            if (shape) {
                const auto& c = std::get<TRat>(low->rep);
                // c = N / g with N = num * den^(p-1), g = den^p = den~(t^p)
                detail::TVec den_p{1}, den_pm1{1};
                for (std::uint32_t i = 0; i + 1 < p; ++i) den_pm1 = detail::tv_mul(den_pm1, c.den, p);
                den_p = detail::tv_mul(den_pm1, c.den, p);
                detail::TVec N = detail::tv_mul(c.num, den_pm1, p);
                auto den_root = detail::tv_p_root(den_p, p); // exists by construction
                // split N into residue classes of exponents mod p
                std::vector<Value> coords(p, base.zero());
                for (std::uint32_t i = 0; i < p; ++i) {
                    detail::TVec Ni;
                    for (std::size_t e = i; e < N.size(); e += p) {
                        Ni.resize((e - i) / p + 1, 0);
                        Ni[(e - i) / p] = N[e];
                    }
                    detail::tv_trim(Ni);
                    coords[i] = Value(detail::tr_make(p, std::move(Ni), *den_root));
                }
                ExtVec ev;
                ev.c = std::move(coords);
                return Value(std::move(ev));
            }
        }
        // otherwise: the base-level root, if it exists, lifts
        if (auto r = p_th_root(base, *low)) return k.lift_from(base, *r);
        // no base root and no usable inseparable level
        throw capability_error("p-th roots over this F_p(t) tower are only supported for the x^p - t level");
    }
    if (k.levels_used() == 1) {
        // proper element of the x^p - t level: M^p = F_p(t) contains no such element
        const auto& mod = k.level_modulus();
        bool shape = mod.size() == p + 1;
        if (shape) {
            for (std::size_t i = 1; i < p; ++i)
                if (!base.is_zero(mod[i])) shape = false;
            if (!base.eq(mod[0], base.neg(base.t_generator()))) shape = false;
        }
        if (shape) return std::nullopt;
    }
    throw capability_error("p-th roots over this F_p(t) tower are only supported for the x^p - t level");
}

// ---------------------------------------------------------------------------
// Squarefree part.

/// Raised evidence that f is inseparable and the p-th-root recursion cannot
/// continue: f = h(x^p) but coefficient h[index] has no p-th root in the
/// coefficient field.
struct InseparabilityWitness {
    Poly h;            // f(x) = h(x^p)
    std::size_t index; // coefficient of h lacking a p-th root
};

struct SquarefreeResult {
    std::optional<Poly> part;                    // monic, same distinct roots as f
    std::optional<InseparabilityWitness> witness; // engaged exactly when part is not
};

/// Monic separable polynomial with the same distinct roots as f, or a witness
/// that an inseparable p-th-power layer blocks the root recursion.
///
/// "Squarefree" here means no repeated roots in an algebraic closure, so an
/// irreducible-but-inseparable factor like x^2 - t over F_2(t) yields a
/// witness rather than passing through unchanged.
inline SquarefreeResult squarefree_part(const Poly& f) {
    if (f.is_zero()) throw domain_error("squarefree part of the zero polynomial");
    Poly fm = f.monic();
    if (fm.deg() == 0) return {Poly::one(f.k), std::nullopt};
    Poly fp = derivative(fm);
    std::uint32_t p = f.k.characteristic();

    if (fp.is_zero()) {
        // f = h(x^p); with coefficient p-th roots r_i, f = (sum r_i x^i)^p
        if (p == 0) throw internal_error("nonconstant rational polynomial with zero derivative");
        std::vector<Value> hc;
        for (std::size_t i = 0; i < fm.c.size(); i += p) hc.push_back(fm.c[i]);
        Poly h(f.k, hc);
        std::vector<Value> roots;
        roots.reserve(hc.size());
        for (std::size_t i = 0; i < h.c.size(); ++i) {
            auto r = p_th_root(f.k, h.c[i]);
            if (!r) return {std::nullopt, InseparabilityWitness{h, i}};
            roots.push_back(std::move(*r));
        }
        return squarefree_part(Poly(f.k, std::move(roots)));
    }

    Poly g = poly_gcd(fm, fp);
    if (g.deg() == 0) return {fm, std::nullopt};
    // part1 collects the separable factors of multiplicity prime to p; factors
    // that are inseparable or have multiplicity divisible by p sit inside g
    // with their full multiplicity and must be recovered separately.
    Poly part1 = poly_div_exact(fm, g);
    Poly w = g;
    for (;;) {
        Poly d = poly_gcd(w, part1);
        if (d.deg() == 0) break;
        w = poly_div_exact(w, d);
    }
    if (w.deg() == 0) return {part1, std::nullopt};
    // every factor left in w has zero derivative, so w' = 0 and the h(x^p)
    // branch above applies
    auto rec = squarefree_part(w);
    if (!rec.part) return {std::nullopt, rec.witness};
    return {(part1 * *rec.part).monic(), std::nullopt};
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (multiplicity-graded), used by factorization.
// Returns pairs (g_i, m) with f = lc * prod g_i^m, each g_i monic, separable,
// squarefree, pairwise coprime.  Peels one squarefree layer per round, which
// is quadratic in the multiplicity but trivial at the degrees involved.

inline std::vector<std::pair<Poly, std::size_t>> squarefree_decomposition(const Poly& f0) {
    if (f0.is_zero()) throw domain_error("squarefree decomposition of the zero polynomial");
    Poly g = f0.monic();
    std::vector<Poly> layers; // layers[m] = product of distinct factors with multiplicity > m
    while (g.deg() > 0) {
        auto sf = squarefree_part(g);
        if (!sf.part) throw capability_error("squarefree decomposition needs coefficient p-th roots");
        layers.push_back(*sf.part);
        g = poly_div_exact(g, *sf.part);
        if (layers.size() > std::size_t(f0.deg()) + 1)
            throw internal_error("squarefree decomposition did not terminate");
    }
    std::vector<std::pair<Poly, std::size_t>> out;
    for (std::size_t m = 0; m < layers.size(); ++m) {
        Poly next = m + 1 < layers.size() ? layers[m + 1] : Poly::one(f0.k);
        Poly exactly = poly_div_exact(layers[m], poly_gcd(layers[m], next));
        if (exactly.deg() > 0) out.emplace_back(exactly, m + 1);
    }
    return out;
}

} // namespace composita

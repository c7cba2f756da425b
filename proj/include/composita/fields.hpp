#pragma once

// Exact arithmetic for towers of field extensions.
//
// Three base fields are supported: the rationals Q, prime fields F_p, and
// rational function fields F_p(t).  On top of a base field a tower of simple
// algebraic extensions can be built, each level given by a monic defining
// polynomial over the level below.  Elements of an extension level are stored
// as coordinate vectors over the level below, so arithmetic reduces level by
// level down to the base field.
//
// Values are immutable after construction and normalization is canonical:
// equal field elements have identical representations, which makes structural
// equality the same as mathematical equality.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "composita/errors.hpp"

namespace composita {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class BaseKind { Rationals, Prime, RationalFunctions };

// ---------------------------------------------------------------------------
// Prime field scalars

namespace detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t(std::uint64_t(a) * b % p);
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw domain_error("division by zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw domain_error("modulus is not prime");
    return std::uint32_t(t < 0 ? t + p : t);
}

/// Deterministic trial division; intended for p < 2^31.
inline bool is_prime_u32(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace detail

/// Element of F_p.  Carries its modulus so values are self-describing.
struct FpElem {
    std::uint32_t p = 0;
    std::uint32_t r = 0;

    friend bool operator==(const FpElem&, const FpElem&) = default;
};

// ---------------------------------------------------------------------------
// Dense polynomials over F_p in the variable t (plumbing for F_p(t))

namespace detail {

using TVec = std::vector<std::uint32_t>; // coefficients low-to-high, no trailing zeros

inline void tv_trim(TVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline int tv_deg(const TVec& v) { return int(v.size()) - 1; } // -1 for zero

inline TVec tv_add(const TVec& a, const TVec& b, std::uint32_t p) {
    TVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = add_mod(x, y, p);
    }
    tv_trim(r);
    return r;
}

inline TVec tv_sub(const TVec& a, const TVec& b, std::uint32_t p) {
    TVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = sub_mod(x, y, p);
    }
    tv_trim(r);
    return r;
}

inline TVec tv_mul(const TVec& a, const TVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    TVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    tv_trim(r);
    return r;
}

inline TVec tv_scale(const TVec& a, std::uint32_t c, std::uint32_t p) {
    TVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], c, p);
    tv_trim(r);
    return r;
}

inline std::pair<TVec, TVec> tv_divmod(const TVec& a, const TVec& b, std::uint32_t p) {
    if (b.empty()) throw domain_error("polynomial division by zero");
    TVec rem = a, quot;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    if (rem.size() >= b.size()) quot.assign(rem.size() - b.size() + 1, 0);
    while (rem.size() >= b.size() && !rem.empty()) {
        std::uint32_t c = mul_mod(rem.back(), lead_inv, p);
        std::size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = sub_mod(rem[shift + i], mul_mod(c, b[i], p), p);
        tv_trim(rem);
    }
    tv_trim(quot);
    return {quot, rem};
}

inline TVec tv_gcd(TVec a, TVec b, std::uint32_t p) {
    while (!b.empty()) {
        TVec r = tv_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = tv_scale(a, inv_mod(a.back(), p), p);
    return a; // monic (or zero)
}

} // namespace detail

/// Element of F_p(t): num/den with den monic and gcd(num, den) = 1; zero is 0/1.
struct TRat {
    std::uint32_t p = 0;
    detail::TVec num;      // empty = zero
    detail::TVec den{1};   // monic, nonzero

    friend bool operator==(const TRat&, const TRat&) = default;
};

namespace detail {

inline TRat tr_make(std::uint32_t p, TVec num, TVec den) {
    if (den.empty()) throw domain_error("zero denominator in F_p(t)");
    if (num.empty()) return TRat{p, {}, {1}};
    TVec g = tv_gcd(num, den, p);
    if (tv_deg(g) > 0) {
        num = tv_divmod(num, g, p).first;
        den = tv_divmod(den, g, p).first;
    }
    std::uint32_t lead_inv = inv_mod(den.back(), p);
    num = tv_scale(num, lead_inv, p);
    den = tv_scale(den, lead_inv, p);
    return TRat{p, std::move(num), std::move(den)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Values

struct Value;

/// Coordinates of an extension-level element over the level below.
/// The vector always has exactly `degree of the level` entries.
struct ExtVec {
    std::vector<Value> c;

    friend bool operator==(const ExtVec&, const ExtVec&);
};

struct Value {
    std::variant<Rational, FpElem, TRat, ExtVec> rep;

    Value() : rep(Rational(0)) {}
    explicit Value(Rational q) : rep(std::move(q)) {}
    explicit Value(FpElem e) : rep(e) {}
    explicit Value(TRat t) : rep(std::move(t)) {}
    explicit Value(ExtVec v) : rep(std::move(v)) {}

    friend bool operator==(const Value& a, const Value& b) { return a.rep == b.rep; }
};

inline bool operator==(const ExtVec& a, const ExtVec& b) { return a.c == b.c; }

// ---------------------------------------------------------------------------
// Tower descriptors

/// One extension step: a monic defining polynomial (coefficients are values
/// of the level below, low-to-high, leading 1 included).
struct TowerLevel {
    std::vector<Value> modulus;
    bool trusted_irreducible = false; // set when irreducibility was asserted, not verified
};

/// Immutable description of a base field plus a chain of simple extensions.
/// An optional trailing marker describes one further step of infinite degree;
/// such descriptors answer classification queries only.
struct TowerSpec {
    BaseKind base = BaseKind::Rationals;
    std::uint32_t p = 0; // characteristic for Prime / RationalFunctions
    std::vector<TowerLevel> levels;
    bool infinite_step = false;
    bool infinite_step_algebraic = false; // annotation supplied at construction
};

class Field;

namespace detail {
// Polynomial helpers on raw coefficient vectors over an arbitrary field,
// declared here and defined after Field.
std::vector<Value> vec_mul(const Field& f, const std::vector<Value>& a, const std::vector<Value>& b);
std::vector<Value> vec_mod(const Field& f, std::vector<Value> a, const std::vector<Value>& monic_b);
} // namespace detail

/// Handle to one level of a tower.  Cheap to copy; all state is shared and
/// immutable.  `levels_used` = 0 denotes the base field itself.
class Field {
  public:
    Field() : spec_(std::make_shared<TowerSpec>()), levels_used_(0) {}

    static Field rationals() { return Field(std::make_shared<TowerSpec>(TowerSpec{BaseKind::Rationals, 0, {}, false, false}), 0); }

    static Field prime(std::uint32_t p) {
        if (!detail::is_prime_u32(p)) throw construction_error("modulus " + std::to_string(p) + " is not prime");
        return Field(std::make_shared<TowerSpec>(TowerSpec{BaseKind::Prime, p, {}, false, false}), 0);
    }

    static Field rational_functions(std::uint32_t p) {
        if (!detail::is_prime_u32(p)) throw construction_error("modulus " + std::to_string(p) + " is not prime");
        return Field(std::make_shared<TowerSpec>(TowerSpec{BaseKind::RationalFunctions, p, {}, false, false}), 0);
    }

    const TowerSpec& spec() const { return *spec_; }
    const std::shared_ptr<const TowerSpec>& spec_ptr() const { return spec_; }
    std::size_t levels_used() const { return levels_used_; }
    BaseKind base() const { return spec_->base; }

    /// True when this handle designates the field above the infinite-degree
    /// marker.  Such a field answers classification queries only; element
    /// arithmetic raises a domain error.
    bool has_infinite_step() const { return inf_; }

    /// The algebraic-or-not annotation supplied when the marker was attached.
    bool infinite_step_algebraic() const {
        if (!inf_) throw internal_error("no infinite step present");
        return spec_->infinite_step_algebraic;
    }

    /// Appends an infinite-degree step (classification only).  `algebraic`
    /// records whether the abstract extension is algebraic, which cannot be
    /// derived from the marker itself.
    Field extended_infinite(bool algebraic) const {
        if (inf_) throw construction_error("tower already ends in an infinite step");
        if (levels_used_ != spec_->levels.size())
            throw internal_error("can only extend the top of a tower");
        auto next = std::make_shared<TowerSpec>(*spec_);
        next->infinite_step = true;
        next->infinite_step_algebraic = algebraic;
        return Field(std::move(next), levels_used_, true);
    }

    /// 0 in characteristic zero, else p.
    std::uint32_t characteristic() const { return spec_->base == BaseKind::Rationals ? 0 : spec_->p; }

    bool is_base() const { return levels_used_ == 0 && !inf_; }

    /// The field one level down; for an infinite-step handle, the finite part.
    Field subfield() const {
        if (inf_) return Field(spec_, levels_used_);
        if (levels_used_ == 0) throw internal_error("base field has no subfield");
        return Field(spec_, levels_used_ - 1);
    }

    Field base_field() const { return Field(spec_, 0); }

    Field at_level(std::size_t level) const {
        if (level > levels_used_) throw internal_error("at_level beyond this field");
        return Field(spec_, level);
    }

    /// Appends one extension level.  Only monicity and degree are checked here;
    /// irreducibility verification lives with extension construction.
    Field extended_unchecked(std::vector<Value> monic_modulus, bool trusted = false) const {
        if (inf_) throw construction_error("cannot extend past an infinite step");
        if (levels_used_ != spec_->levels.size())
            throw internal_error("can only extend the top of a tower");
        if (monic_modulus.size() < 3)
            throw construction_error("defining polynomial must have degree >= 2");
        if (!is_one(monic_modulus.back()))
            throw construction_error("defining polynomial must be monic");
        auto next = std::make_shared<TowerSpec>(*spec_);
        next->levels.push_back(TowerLevel{std::move(monic_modulus), trusted});
        return Field(std::move(next), levels_used_ + 1);
    }

    /// Degree of the defining polynomial of the top level.
    std::size_t level_degree() const {
        if (levels_used_ == 0) throw internal_error("base field has no defining polynomial");
        return spec_->levels[levels_used_ - 1].modulus.size() - 1;
    }

    const std::vector<Value>& level_modulus() const {
        if (levels_used_ == 0) throw internal_error("base field has no defining polynomial");
        return spec_->levels[levels_used_ - 1].modulus;
    }

    bool level_trusted() const {
        if (levels_used_ == 0) return false;
        return spec_->levels[levels_used_ - 1].trusted_irreducible;
    }

    /// Dimension over the given subfield (product of level degrees).  Throws
    /// for infinite-step handles; callers decide how to represent INFINITE.
    std::size_t degree_over(const Field& lower) const {
        require_prefix(lower);
        if (inf_ && !lower.inf_) throw domain_error("degree over an infinite step is not a number");
        std::size_t d = 1;
        for (std::size_t i = lower.levels_used_; i < levels_used_; ++i)
            d *= spec_->levels[i].modulus.size() - 1;
        return d;
    }

    /// Number of elements; empty for infinite fields.
    std::optional<BigInt> size() const {
        if (inf_) return std::nullopt;
        if (spec_->base != BaseKind::Prime) return std::nullopt;
        std::size_t total = 1;
        for (std::size_t i = 0; i < levels_used_; ++i)
            total *= spec_->levels[i].modulus.size() - 1;
        BigInt r = 1;
        for (std::size_t j = 0; j < total; ++j) r *= spec_->p;
        return r;
    }

    /// Structural equality of the descriptors (same base, same moduli).
    bool same_field(const Field& other) const {
        if (levels_used_ != other.levels_used_ || inf_ != other.inf_) return false;
        return is_prefix_of(other) && other.is_prefix_of(*this);
    }

    /// True when this field's full descriptor is an initial segment of `other`'s.
    bool is_prefix_of(const Field& other) const {
        if (spec_->base != other.spec_->base || spec_->p != other.spec_->p) return false;
        if (levels_used_ > other.levels_used_) return false;
        if (inf_ && !(other.inf_ && levels_used_ == other.levels_used_)) return false;
        if (spec_ == other.spec_ && inf_ == other.inf_) return true;
        for (std::size_t i = 0; i < levels_used_; ++i)
            if (!(spec_->levels[i].modulus == other.spec_->levels[i].modulus)) return false;
        return true;
    }

    void require_same(const Field& other) const {
        if (!same_field(other)) throw domain_error("field descriptors do not match");
    }

    void require_prefix(const Field& lower) const {
        if (!lower.is_prefix_of(*this)) throw domain_error("field is not an extension of the given subfield");
    }

    // -- construction of values ------------------------------------------------

    Value zero() const { return from_int(0); }
    Value one() const { return from_int(1); }

    Value from_int(long long n) const { return from_rational(Rational(n)); }

    Value from_rational(const Rational& q) const {
        require_elements();
        Value base_val = base_rational(q);
        return lift_from(base_field(), base_val);
    }

    /// The generator adjoined at the top level (the class of x).
    Value generator() const {
        require_elements();
        if (levels_used_ == 0) throw domain_error("base field has no adjoined generator");
        ExtVec v;
        std::size_t d = level_degree();
        v.c.assign(d, subfield().zero());
        if (d >= 2) v.c[1] = subfield().one();
        return Value(std::move(v));
    }

    /// The variable t of F_p(t).
    Value t_generator() const {
        if (spec_->base != BaseKind::RationalFunctions)
            throw domain_error("t exists only over a rational function base field");
        Value t(TRat{spec_->p, {0, 1}, {1}});
        return lift_from(base_field(), t);
    }

    /// Embeds a value of a lower level of the same tower into this level.
    Value lift_from(const Field& lower, const Value& v) const {
        require_elements();
        require_prefix(lower);
        Value r = v;
        for (std::size_t lev = lower.levels_used_; lev < levels_used_; ++lev) {
            Field mid(spec_, lev);
            std::size_t d = spec_->levels[lev].modulus.size() - 1;
            ExtVec e;
            e.c.assign(d, mid.zero());
            e.c[0] = std::move(r);
            r = Value(std::move(e));
        }
        return r;
    }

    /// Writes a value of this level as a coordinate vector over `lower`
    /// (length = degree_over(lower)), expanding level by level.
    std::vector<Value> flatten(const Value& v, const Field& lower) const {
        require_elements();
        require_prefix(lower);
        if (levels_used_ == lower.levels_used_) return {v};
        const auto& e = std::get<ExtVec>(v.rep);
        std::vector<Value> out;
        Field sub = subfield();
        for (const Value& c : e.c) {
            auto part = sub.flatten(c, lower);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }

    /// Inverse of flatten.
    Value unflatten(const std::vector<Value>& coords, const Field& lower) const {
        require_elements();
        require_prefix(lower);
        std::size_t expect = degree_over(lower);
        if (coords.size() != expect) throw internal_error("unflatten: wrong coordinate count");
        if (levels_used_ == lower.levels_used_) return coords[0];
        Field sub = subfield();
        std::size_t block = sub.degree_over(lower);
        ExtVec e;
        for (std::size_t i = 0; i < coords.size(); i += block) {
            std::vector<Value> part(coords.begin() + i, coords.begin() + i + block);
            e.c.push_back(sub.unflatten(part, lower));
        }
        return Value(std::move(e));
    }

    /// If v lies in the image of `lower` inside this field, returns its
    /// representative there.
    std::optional<Value> lower_to(const Value& v, const Field& lower) const {
        require_elements();
        require_prefix(lower);
        Value cur = v;
        for (std::size_t lev = levels_used_; lev > lower.levels_used_; --lev) {
            Field at(spec_, lev);
            const auto& e = std::get<ExtVec>(cur.rep);
            Field sub = at.subfield();
            for (std::size_t i = 1; i < e.c.size(); ++i)
                if (!sub.is_zero(e.c[i])) return std::nullopt;
            cur = e.c[0];
        }
        return cur;
    }

    // -- predicates ------------------------------------------------------------

    bool is_zero(const Value& v) const {
        switch (kind_at(levels_used_)) {
            case VK::Rat: return std::get<Rational>(v.rep).is_zero();
            case VK::Fp: return std::get<FpElem>(v.rep).r == 0;
            case VK::TR: return std::get<TRat>(v.rep).num.empty();
            case VK::Ext: {
                const auto& e = std::get<ExtVec>(v.rep);
                Field sub = subfield();
                for (const auto& c : e.c)
                    if (!sub.is_zero(c)) return false;
                return true;
            }
        }
        throw internal_error("unreachable");
    }

    bool is_one(const Value& v) const { return eq(v, one()); }

    bool eq(const Value& a, const Value& b) const { return a == b; }

    // -- arithmetic ------------------------------------------------------------

    Value add(const Value& a, const Value& b) const {
        switch (kind_at(levels_used_)) {
            case VK::Rat: return Value(Rational(std::get<Rational>(a.rep) + std::get<Rational>(b.rep)));
            case VK::Fp: {
                const auto &x = std::get<FpElem>(a.rep), &y = std::get<FpElem>(b.rep);
                check_p(x.p, y.p);
                return Value(FpElem{x.p, detail::add_mod(x.r, y.r, x.p)});
            }
            case VK::TR: {
                const auto &x = std::get<TRat>(a.rep), &y = std::get<TRat>(b.rep);
                check_p(x.p, y.p);
                auto num = detail::tv_add(detail::tv_mul(x.num, y.den, x.p), detail::tv_mul(y.num, x.den, x.p), x.p);
                return Value(detail::tr_make(x.p, std::move(num), detail::tv_mul(x.den, y.den, x.p)));
            }
            case VK::Ext: {
                const auto &x = std::get<ExtVec>(a.rep), &y = std::get<ExtVec>(b.rep);
                check_len(x, y);
                Field sub = subfield();
                ExtVec r;
                r.c.reserve(x.c.size());
                for (std::size_t i = 0; i < x.c.size(); ++i) r.c.push_back(sub.add(x.c[i], y.c[i]));
                return Value(std::move(r));
            }
        }
        throw internal_error("unreachable");
    }

    Value neg(const Value& a) const {
        switch (kind_at(levels_used_)) {
            case VK::Rat: return Value(Rational(-std::get<Rational>(a.rep)));
            case VK::Fp: {
                const auto& x = std::get<FpElem>(a.rep);
                return Value(FpElem{x.p, x.r == 0 ? 0 : x.p - x.r});
            }
            case VK::TR: {
                const auto& x = std::get<TRat>(a.rep);
                return Value(TRat{x.p, detail::tv_sub({}, x.num, x.p), x.den});
            }
            case VK::Ext: {
                const auto& x = std::get<ExtVec>(a.rep);
                Field sub = subfield();
                ExtVec r;
                r.c.reserve(x.c.size());
                for (const auto& c : x.c) r.c.push_back(sub.neg(c));
                return Value(std::move(r));
            }
        }
        throw internal_error("unreachable");
    }

    Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

    Value mul(const Value& a, const Value& b) const {
        switch (kind_at(levels_used_)) {
            case VK::Rat: return Value(Rational(std::get<Rational>(a.rep) * std::get<Rational>(b.rep)));
            case VK::Fp: {
                const auto &x = std::get<FpElem>(a.rep), &y = std::get<FpElem>(b.rep);
                check_p(x.p, y.p);
                return Value(FpElem{x.p, detail::mul_mod(x.r, y.r, x.p)});
            }
            case VK::TR: {
                const auto &x = std::get<TRat>(a.rep), &y = std::get<TRat>(b.rep);
                check_p(x.p, y.p);
                return Value(detail::tr_make(x.p, detail::tv_mul(x.num, y.num, x.p), detail::tv_mul(x.den, y.den, x.p)));
            }
            case VK::Ext: {
                const auto &x = std::get<ExtVec>(a.rep), &y = std::get<ExtVec>(b.rep);
                check_len(x, y);
                Field sub = subfield();
                auto prod = detail::vec_mul(sub, x.c, y.c);
                prod = detail::vec_mod(sub, std::move(prod), level_modulus());
                ExtVec r;
                r.c = std::move(prod);
                r.c.resize(level_degree(), sub.zero());
                return Value(std::move(r));
            }
        }
        throw internal_error("unreachable");
    }

    Value inv(const Value& a) const;

    Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

    Value pow(Value a, BigInt e) const {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        Value r = one();
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Scalar multiple n*a without constructing a Rational in prime fields.
    Value mul_int(const Value& a, long long n) const { return mul(a, from_int(n)); }

    // -- deterministic total order (for sorted, reproducible output) -----------

    int cmp(const Value& a, const Value& b) const {
        switch (kind_at(levels_used_)) {
            case VK::Rat: {
                const auto &x = std::get<Rational>(a.rep), &y = std::get<Rational>(b.rep);
                return x < y ? -1 : (x == y ? 0 : 1);
            }
            case VK::Fp: {
                const auto &x = std::get<FpElem>(a.rep), &y = std::get<FpElem>(b.rep);
                return x.r < y.r ? -1 : (x.r == y.r ? 0 : 1);
            }
            case VK::TR: {
                const auto &x = std::get<TRat>(a.rep), &y = std::get<TRat>(b.rep);
                if (auto c = cmp_tvec(x.den, y.den)) return c;
                return cmp_tvec(x.num, y.num);
            }
            case VK::Ext: {
                const auto &x = std::get<ExtVec>(a.rep), &y = std::get<ExtVec>(b.rep);
                Field sub = subfield();
                for (std::size_t i = 0; i < x.c.size(); ++i)
                    if (int c = sub.cmp(x.c[i], y.c[i])) return c;
                return 0;
            }
        }
        throw internal_error("unreachable");
    }

    /// Element with the given index in a finite field, coordinates varying
    /// lowest-first.  Index must be < size().
    Value element_by_index(const BigInt& index) const {
        require_elements();
        if (spec_->base != BaseKind::Prime) throw capability_error("enumeration requires a finite field");
        if (levels_used_ == 0) {
            return Value(FpElem{spec_->p, std::uint32_t(index % spec_->p)});
        }
        Field sub = subfield();
        BigInt sub_size = *sub.size();
        std::size_t d = level_degree();
        ExtVec e;
        BigInt rest = index;
        for (std::size_t i = 0; i < d; ++i) {
            e.c.push_back(sub.element_by_index(rest % sub_size));
            rest /= sub_size;
        }
        return Value(std::move(e));
    }

  private:
    enum class VK { Rat, Fp, TR, Ext };

    void require_elements() const {
        if (inf_) throw domain_error("a field behind an infinite-degree marker has no representable elements");
    }

    VK kind_at(std::size_t level) const {
        require_elements();
        if (level > 0) return VK::Ext;
        switch (spec_->base) {
            case BaseKind::Rationals: return VK::Rat;
            case BaseKind::Prime: return VK::Fp;
            case BaseKind::RationalFunctions: return VK::TR;
        }
        throw internal_error("unreachable");
    }

    Value base_rational(const Rational& q) const {
        switch (spec_->base) {
            case BaseKind::Rationals: return Value(q);
            case BaseKind::Prime: {
                return Value(FpElem{spec_->p, rational_mod_p(q, spec_->p)});
            }
            case BaseKind::RationalFunctions: {
                std::uint32_t r = rational_mod_p(q, spec_->p);
                detail::TVec num;
                if (r != 0) num = {r};
                return Value(TRat{spec_->p, std::move(num), {1}});
            }
        }
        throw internal_error("unreachable");
    }

    static std::uint32_t rational_mod_p(const Rational& q, std::uint32_t p) {
        BigInt num = numerator(q) % p;
        if (num < 0) num += p;
        BigInt den = denominator(q) % p;
        std::uint32_t d = std::uint32_t(den);
        if (d == 0) throw domain_error("denominator divisible by the characteristic");
        return detail::mul_mod(std::uint32_t(num), detail::inv_mod(d, p), p);
    }

    static void check_p(std::uint32_t a, std::uint32_t b) {
        if (a != b) throw domain_error("elements of different prime fields");
    }

    static void check_len(const ExtVec& a, const ExtVec& b) {
        if (a.c.size() != b.c.size()) throw domain_error("elements of different extensions");
    }

    static int cmp_tvec(const detail::TVec& x, const detail::TVec& y) {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (std::size_t i = x.size(); i-- > 0;)
            if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
        return 0;
    }

    Field(std::shared_ptr<const TowerSpec> spec, std::size_t levels_used, bool inf = false)
        : spec_(std::move(spec)), levels_used_(levels_used), inf_(inf) {}

    std::shared_ptr<const TowerSpec> spec_;
    std::size_t levels_used_;
    bool inf_ = false;
};

// ---------------------------------------------------------------------------
// Raw coefficient-vector polynomial helpers over an arbitrary field.
// Vectors are low-to-high with no trailing zeros (empty = zero polynomial).

namespace detail {

inline void vec_trim(const Field& f, std::vector<Value>& v) {
    while (!v.empty() && f.is_zero(v.back())) v.pop_back();
}

inline std::vector<Value> vec_add(const Field& f, const std::vector<Value>& a, const std::vector<Value>& b) {
    std::vector<Value> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size()) r[i] = f.add(a[i], b[i]);
        else if (i < a.size()) r[i] = a[i];
        else r[i] = b[i];
    }
    vec_trim(f, r);
    return r;
}

inline std::vector<Value> vec_sub(const Field& f, const std::vector<Value>& a, const std::vector<Value>& b) {
    std::vector<Value> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Value x = i < a.size() ? a[i] : f.zero();
        Value y = i < b.size() ? b[i] : f.zero();
        r[i] = f.sub(x, y);
    }
    vec_trim(f, r);
    return r;
}

inline std::vector<Value> vec_mul(const Field& f, const std::vector<Value>& a, const std::vector<Value>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Value> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    vec_trim(f, r);
    return r;
}

inline std::vector<Value> vec_scale(const Field& f, const std::vector<Value>& a, const Value& c) {
    std::vector<Value> r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(f.mul(x, c));
    vec_trim(f, r);
    return r;
}

/// General division with remainder; divisor need not be monic.
inline std::pair<std::vector<Value>, std::vector<Value>>
vec_divmod(const Field& f, std::vector<Value> a, const std::vector<Value>& b) {
    if (b.empty()) throw domain_error("polynomial division by zero");
    std::vector<Value> quot;
    const Value lead_inv = f.inv(b.back());
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, f.zero());
    while (a.size() >= b.size()) {
        Value c = f.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        // the leading term cancels exactly; trim it and any new zeros
        a.pop_back();
        vec_trim(f, a);
    }
    return {std::move(quot), std::move(a)};
}

inline std::vector<Value> vec_mod(const Field& f, std::vector<Value> a, const std::vector<Value>& monic_b) {
    return vec_divmod(f, std::move(a), monic_b).second;
}

inline Value vec_eval(const Field& f, const std::vector<Value>& a, const Value& x) {
    Value r = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
inline std::tuple<std::vector<Value>, std::vector<Value>, std::vector<Value>>
vec_ext_gcd(const Field& f, std::vector<Value> a, std::vector<Value> b) {
    std::vector<Value> s0{f.one()}, s1, t0, t1{f.one()};
    while (!b.empty()) {
        auto [q, r] = vec_divmod(f, a, b);
        a = std::move(b);
        b = std::move(r);
        auto ns = vec_sub(f, s0, vec_mul(f, q, s1));
        s0 = std::move(s1);
        s1 = std::move(ns);
        auto nt = vec_sub(f, t0, vec_mul(f, q, t1));
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (!a.empty() && !f.is_one(a.back())) {
        Value c = f.inv(a.back());
        a = vec_scale(f, a, c);
        s0 = vec_scale(f, s0, c);
        t0 = vec_scale(f, t0, c);
    }
    return {std::move(a), std::move(s0), std::move(t0)};
}

} // namespace detail

inline Value Field::inv(const Value& a) const {
    if (is_zero(a)) throw domain_error("division by zero");
    switch (kind_at(levels_used_)) {
        case VK::Rat: return Value(Rational(1 / std::get<Rational>(a.rep)));
        case VK::Fp: {
            const auto& x = std::get<FpElem>(a.rep);
            return Value(FpElem{x.p, detail::inv_mod(x.r, x.p)});
        }
        case VK::TR: {
            const auto& x = std::get<TRat>(a.rep);
            return Value(detail::tr_make(x.p, x.den, x.num));
        }
        case VK::Ext: {
            const auto& x = std::get<ExtVec>(a.rep);
            Field sub = subfield();
            std::vector<Value> av = x.c;
            detail::vec_trim(sub, av);
            auto [g, s, t] = detail::vec_ext_gcd(sub, av, level_modulus());
            if (g.size() != 1)
                throw construction_error("defining polynomial is reducible: gcd with element is nontrivial");
            (void)t;
            ExtVec r;
            r.c = std::move(s);
            detail::vec_trim(sub, r.c); // may exceed degree only transiently
            r.c = detail::vec_mod(sub, std::move(r.c), level_modulus());
            r.c.resize(level_degree(), sub.zero());
            return Value(std::move(r));
        }
    }
    throw internal_error("unreachable");
}

} // namespace composita

#pragma once

// Shared builders for the test suite.

#include "composita/fields.hpp"
#include "composita/poly.hpp"

#include <random>

namespace testutil {

using namespace composita;

/// Polynomial from integer coefficients, lowest degree first.
inline Poly ip(const Field& F, std::vector<long long> cs) {
    std::vector<Value> v;
    for (auto n : cs) v.push_back(F.from_int(n));
    return Poly(F, std::move(v));
}

/// Random element with small height, valid over any supported base or tower.
inline Value sample_value(const Field& F, std::mt19937_64& rng) {
    switch (F.base()) {
        case BaseKind::Rationals: {
            if (F.is_base()) {
                long long n = static_cast<long long>(rng() % 201) - 100;
                long long d = 1 + static_cast<long long>(rng() % 12);
                return F.from_rational(Rational(n, d));
            }
            break;
        }
        case BaseKind::Prime:
            if (F.is_base())
                return F.from_int(static_cast<long long>(rng() % F.characteristic()));
            break;
        case BaseKind::RationalFunctions:
            if (F.is_base()) {
                std::uint32_t p = F.characteristic();
                Value t = F.t_generator();
                Value num = F.zero(), den = F.one(), tp = F.one();
                for (int e = 0; e < 3; ++e) {
                    num = F.add(num, F.mul(F.from_int(static_cast<long long>(rng() % p)), tp));
                    tp = F.mul(tp, t);
                }
                if (rng() % 2) den = F.add(t, F.from_int(static_cast<long long>(1 + rng() % (p - 1 ? p - 1 : 1))));
                return F.div(num, den);
            }
            break;
    }
    // towers: random coordinates over the base
    Field B = F.base_field();
    std::size_t n = F.degree_over(B);
    std::vector<Value> coords;
    coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) coords.push_back(sample_value(B, rng));
    return F.unflatten(coords, B);
}

inline Poly sample_poly(const Field& F, std::size_t max_deg, std::mt19937_64& rng) {
    std::size_t d = rng() % (max_deg + 1);
    std::vector<Value> cs;
    for (std::size_t i = 0; i <= d; ++i) cs.push_back(sample_value(F, rng));
    return Poly(F, std::move(cs));
}

} // namespace testutil

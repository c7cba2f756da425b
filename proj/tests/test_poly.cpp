#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace composita;
using testutil::ip;
using testutil::sample_poly;

TEST_CASE("division with remainder", "[poly]") {
    Field Q = Field::rationals();
    auto [q1, r1] = poly_divmod(ip(Q, {-1, 0, 1}), ip(Q, {-1, 1}));
    REQUIRE(q1 == ip(Q, {1, 1}));
    REQUIRE(r1.is_zero());
    auto [q2, r2] = poly_divmod(ip(Q, {0, 1}), ip(Q, {-2, 0, 1}));
    REQUIRE(q2.is_zero());
    REQUIRE(r2 == ip(Q, {0, 1}));
    Field F2 = Field::prime(2);
    auto [q3, r3] = poly_divmod(ip(F2, {0, 0, 0, 1}), ip(F2, {1, 0, 1}));
    REQUIRE(q3 == ip(F2, {0, 1}));
    REQUIRE(r3 == ip(F2, {0, 1}));
    REQUIRE_THROWS_AS(poly_divmod(ip(Q, {1}), Poly::zero(Q)), domain_error);
}

TEST_CASE("gcd and derivatives", "[poly]") {
    Field Q = Field::rationals();
    REQUIRE(poly_gcd(ip(Q, {-1, 0, 1}), ip(Q, {1, -2, 1})) == ip(Q, {-1, 1}));
    REQUIRE(poly_gcd(ip(Q, {2, 2}), Poly::zero(Q)) == ip(Q, {1, 1})); // monic
    REQUIRE(derivative(ip(Q, {-2, 0, 0, 1})) == ip(Q, {0, 0, 3}));
    Field F2 = Field::prime(2);
    REQUIRE(derivative(ip(F2, {1, 0, 1})).is_zero()); // d/dx (x^2+1) in char 2
}

TEST_CASE("squarefree machinery and inseparability witnesses", "[poly]") {
    Field Q = Field::rationals();
    auto sf = squarefree_part(ip(Q, {1, -1, -1, 1})); // (x-1)^2 (x+1)
    REQUIRE(*sf.part == ip(Q, {-1, 0, 1}));
    REQUIRE(*squarefree_part(ip(Q, {-2, 0, 0, 1})).part == ip(Q, {-2, 0, 0, 1}));

    Field K = Field::rational_functions(2);
    Value t = K.t_generator();
    Poly x2t(K, {K.neg(t), K.zero(), K.one()});
    auto sw = squarefree_part(x2t); // derivative vanishes: witness, no part
    REQUIRE_FALSE(sw.part.has_value());
    REQUIRE(sw.witness.has_value());

    auto dec = squarefree_decomposition(ip(Q, {1, -1, -1, 1}));
    REQUIRE(dec.size() == 2);
    Field F2 = Field::prime(2);
    auto dec2 = squarefree_decomposition(ip(F2, {1, 0, 1})); // (x+1)^2
    REQUIRE(dec2.size() == 1);
    REQUIRE(dec2[0].second == 2);
    REQUIRE(dec2[0].first == ip(F2, {1, 1}));
}

TEST_CASE("resultants", "[poly]") {
    Field Q = Field::rationals();
    REQUIRE(std::get<Rational>(resultant(ip(Q, {-2, 1}), ip(Q, {-3, 1})).rep) == Rational(-1));
    REQUIRE(std::get<Rational>(resultant(ip(Q, {-2, 0, 1}), ip(Q, {0, 1})).rep) == Rational(-2));
    Poly f = ip(Q, {-1, 0, 1});
    REQUIRE(std::get<Rational>(resultant(f, derivative(f)).rep) == Rational(-4));
}

TEST_CASE("p-th roots", "[poly]") {
    Field K = Field::rational_functions(2);
    Value t = K.t_generator();
    Value t2 = K.mul(t, t);
    REQUIRE(*p_th_root(K, t2) == t);
    REQUIRE_FALSE(p_th_root(K, t).has_value());
    // (t^2+1)/t^4 has square root (t+1)/t^2
    Value c = K.div(K.add(t2, K.one()), K.mul(t2, t2));
    auto rc = p_th_root(K, c);
    REQUIRE(rc.has_value());
    REQUIRE(K.eq(K.mul(*rc, *rc), c));

    // over F_2(t)(s) with s^2 = t every base element has a square root
    Field M = K.extended_unchecked({K.neg(t), K.zero(), K.one()});
    Value s = M.generator();
    REQUIRE(*p_th_root(M, M.lift_from(K, t)) == s);
    auto r1 = p_th_root(M, M.add(M.lift_from(K, t), M.one()));
    REQUIRE(r1.has_value());
    REQUIRE(M.eq(*r1, M.add(s, M.one())));
    REQUIRE_FALSE(p_th_root(M, s).has_value()); // s itself is no square
    Value c3 = K.div(K.mul(t2, t), K.add(K.add(t2, t), K.one()));
    auto rM = p_th_root(M, M.lift_from(K, c3));
    REQUIRE(rM.has_value());
    REQUIRE(M.eq(M.mul(*rM, *rM), M.lift_from(K, c3)));

    // finite fields are perfect: q/p-th power inverts Frobenius
    Field F9 = Field::prime(3).extended_unchecked(
        {Field::prime(3).one(), Field::prime(3).zero(), Field::prime(3).one()});
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Value v = testutil::sample_value(F9, rng);
        auto r = p_th_root(F9, v);
        REQUIRE(r.has_value());
        REQUIRE(F9.eq(F9.mul(*r, F9.mul(*r, *r)), v)); // (r)^3 = v
    }
}

TEST_CASE("modular exponentiation", "[poly]") {
    Field F2 = Field::prime(2);
    REQUIRE(poly_pow_mod(ip(F2, {0, 1}), 4, ip(F2, {1, 1, 1})) == ip(F2, {0, 1}));
}

TEST_CASE("division and gcd invariants on random pairs", "[poly][property]") {
    std::mt19937_64 rng(99);
    std::vector<Field> fields = {Field::rationals(), Field::prime(5)};
    for (const Field& F : fields) {
        for (int iter = 0; iter < 500; ++iter) {
            Poly f = sample_poly(F, 6, rng);
            Poly g = sample_poly(F, 4, rng);
            if (g.is_zero()) continue;
            auto [q, r] = poly_divmod(f, g);
            REQUIRE(poly_cmp(q * g + r, f) == 0);
            REQUIRE((r.is_zero() || r.deg() < g.deg()));
            Poly d = poly_gcd(f, g);
            if (!d.is_zero()) {
                REQUIRE(poly_mod(f, d).is_zero());
                REQUIRE(poly_mod(g, d).is_zero());
                REQUIRE(d.is_monic());
            }
            auto [g0, a, b] = poly_ext_gcd(f, g);
            REQUIRE(poly_cmp(a * f + b * g, g0) == 0);
            REQUIRE(poly_cmp(g0, d) == 0);
        }
    }
}

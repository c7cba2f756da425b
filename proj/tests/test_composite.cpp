#include "helpers.hpp"

#include "composita/composite.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace composita;
using testutil::ip;
using testutil::sample_value;

namespace {

Extension quad_ext() {
    Field Q = Field::rationals();
    return make_extension(Q, ip(Q, {-2, 0, 1}));
}

} // namespace

TEST_CASE("membership is decided by the constant coefficient", "[composite]") {
    auto E = quad_ext();
    Field L = E.upper;
    CompositeRing T = make_composite(E);
    Value r2 = L.generator();
    REQUIRE(composite_contains(T, Poly(L, {L.from_int(3), r2})));
    REQUIRE_FALSE(composite_contains(T, Poly(L, {r2})));
    REQUIRE(composite_contains(T, Poly::zero(L)));
    REQUIRE_THROWS_AS(CompositeElement(T, Poly(L, {r2})), domain_error);
}

TEST_CASE("arithmetic stays inside the subring", "[composite]") {
    auto E = quad_ext();
    Field L = E.upper;
    CompositeRing T = make_composite(E);
    Value r2 = L.generator();
    CompositeElement a(T, Poly(L, {L.one(), r2}));
    CompositeElement b(T, Poly(L, {L.from_int(2), L.one()}));
    auto prod = composite_mul(a, b);
    REQUIRE(prod.f == Poly(L, {L.from_int(2), L.add(L.one(), L.mul_int(r2, 2)), r2}));
}

TEST_CASE("closure under ring operations on random pairs", "[composite][property]") {
    auto E = quad_ext();
    Field L = E.upper;
    Field Q = E.lower;
    CompositeRing T = make_composite(E);
    std::mt19937_64 rng(123);
    for (int iter = 0; iter < 500; ++iter) {
        // random T-elements: constant in K, higher coefficients in L
        auto mk = [&] {
            std::size_t d = rng() % 4;
            std::vector<Value> cs{L.lift_from(Q, sample_value(Q, rng))};
            for (std::size_t i = 0; i < d; ++i) cs.push_back(sample_value(L, rng));
            return CompositeElement(T, Poly(L, std::move(cs)));
        };
        CompositeElement a = mk(), b = mk();
        REQUIRE(composite_contains(T, composite_add(a, b).f));
        REQUIRE(composite_contains(T, composite_sub(a, b).f));
        REQUIRE(composite_contains(T, composite_mul(a, b).f));
    }
}

TEST_CASE("monomial basis is ordered by total degree then generator", "[composite]") {
    auto E = quad_ext();
    Field L = E.upper;
    Field Q = E.lower;
    Poly f(L, {L.from_int(-3), L.zero(), L.one()});
    Field M = make_extension(L, f).upper;
    auto basis = monomial_basis(M, Q);
    REQUIRE(basis.size() == 4);
    Value s2 = M.lift_from(L, L.generator());
    Value s3 = M.generator();
    REQUIRE(M.eq(basis[0], M.one()));
    REQUIRE(M.eq(basis[1], s2));
    REQUIRE(M.eq(basis[2], s3));
    REQUIRE(M.eq(basis[3], M.mul(s2, s3)));
}

TEST_CASE("ideal generators and bounded certificates", "[composite]") {
    auto E = quad_ext();
    Field L = E.upper;
    CompositeRing T = make_composite(E);
    Value r2 = L.generator();
    REQUIRE(is_noetherian(T));

    auto gens = xl_ideal_generators(T);
    REQUIRE(gens.size() == 2);
    REQUIRE(gens[0].f == Poly(L, {L.zero(), L.one()}));
    REQUIRE(gens[1].f == Poly(L, {L.zero(), r2}));

    auto cert = certify_generation(T, gens, 3);
    REQUIRE(cert.rows.size() == 6); // 2 generators x bound 3
    for (const auto& row : cert.rows) REQUIRE(row.cofactors.size() == gens.size());

    std::vector<CompositeElement> only_x{gens[0]};
    REQUIRE_THROWS_AS(certify_generation(T, only_x, 4), not_generated_error);

    CompositeElement tgt(T, Poly(L, {L.zero(), L.zero(), L.zero(), r2}));
    REQUIRE(ideal_membership_bounded(T, gens, tgt, 2).has_value());
    CompositeElement s2x(T, Poly(L, {L.zero(), r2}));
    REQUIRE_FALSE(ideal_membership_bounded(T, only_x, s2x, 5).has_value());
}

TEST_CASE("quartic tower certificate", "[composite]") {
    auto E = quad_ext();
    Field L = E.upper;
    Field Q = E.lower;
    Field M = make_extension(L, Poly(L, {L.from_int(-3), L.zero(), L.one()})).upper;
    auto T2 = make_composite(make_step(Q, M));
    auto gens = xl_ideal_generators(T2);
    REQUIRE(gens.size() == 4);
    REQUIRE(certify_generation(T2, gens, 2).rows.size() == 8);
}

TEST_CASE("degenerate and infinite cases", "[composite]") {
    Field Q = Field::rationals();
    auto Tk = make_composite(Extension{Q, Q, 1});
    auto gens = xl_ideal_generators(Tk);
    REQUIRE(gens.size() == 1); // K[X]: the ideal (X)
    REQUIRE(certify_generation(Tk, gens, 3).rows.size() == 3);

    auto Ti = make_composite(Extension{Q, Q.extended_infinite(true), std::nullopt});
    REQUIRE_FALSE(is_noetherian(Ti));
    REQUIRE_THROWS_AS(xl_ideal_generators(Ti), domain_error);
}

TEST_CASE("characteristic p certificate", "[composite]") {
    Field F2 = Field::prime(2);
    auto Ef = make_extension(F2, ip(F2, {1, 1, 1}));
    auto Tf = make_composite(Ef);
    auto gens = xl_ideal_generators(Tf);
    REQUIRE(gens.size() == 2);
    REQUIRE(certify_generation(Tf, gens, 2).rows.size() == 4);
}

TEST_CASE("certificates replay to their targets", "[composite]") {
    // multiply each cofactor by its generator and compare against the target
    auto E = quad_ext();
    Field L = E.upper;
    CompositeRing T = make_composite(E);
    auto gens = xl_ideal_generators(T);
    auto cert = certify_generation(T, gens, 4);
    for (const auto& row : cert.rows) {
        Poly sum = Poly::zero(L);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            REQUIRE(composite_contains(T, row.cofactors[j]));
            sum = sum + row.cofactors[j] * gens[j].f;
        }
        REQUIRE(sum == row.target);
    }
}

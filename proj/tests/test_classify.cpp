#include "helpers.hpp"

#include "composita/harness.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace composita;
using testutil::ip;

TEST_CASE("quadratic extension of Q is Galois with group C2", "[classify]") {
    Field Q = Field::rationals();
    auto r = classify(make_extension(Q, ip(Q, {-2, 0, 1})));
    REQUIRE(*r.degree == 2);
    REQUIRE(r.finite.is_true());
    REQUIRE(r.algebraic.is_true());
    REQUIRE(r.separable.is_true());
    REQUIRE(r.normal.is_true());
    REQUIRE(r.galois.is_true());
    REQUIRE(*r.aut_order == 2);
    REQUIRE(r.group_id == "C2");
    REQUIRE(r.fixed_field_is_K.is_true());
    REQUIRE(r.hypothesis_flags.at("perfect_base").is_true());
    REQUIRE(r.hypothesis_flags.at("aut_order_equals_degree").is_true());
}

TEST_CASE("cubic root extension is separable but not normal", "[classify]") {
    Field Q = Field::rationals();
    auto r = classify(make_extension(Q, ip(Q, {-2, 0, 0, 1})));
    REQUIRE(*r.degree == 3);
    REQUIRE(r.separable.is_true());
    REQUIRE(r.normal.is_false());
    REQUIRE(r.galois.is_false());
    REQUIRE(*r.aut_order == 1);
    REQUIRE(r.fixed_field_is_K.is_false()); // the trivial group fixes all of L
    REQUIRE(r.hypothesis_flags.at("aut_order_equals_degree").is_false());
}

TEST_CASE("adjoining sqrt(t) in characteristic 2 is normal but inseparable", "[classify]") {
    Field K = Field::rational_functions(2);
    Poly f(K, {K.neg(K.t_generator()), K.zero(), K.one()});
    auto r = classify(make_extension(K, f));
    REQUIRE(*r.degree == 2);
    REQUIRE(r.separable.is_false());
    REQUIRE(r.normal.is_true()); // (x - sqrt t)^2 splits
    REQUIRE(r.galois.is_false());
    REQUIRE(*r.aut_order == 1);
    REQUIRE(r.fixed_field_is_K.is_false());
    REQUIRE(r.hypothesis_flags.at("perfect_base").is_false());
}

TEST_CASE("trivial extension satisfies everything", "[classify]") {
    Field Q = Field::rationals();
    auto r = classify(Extension{Q, Q, 1});
    REQUIRE(*r.degree == 1);
    REQUIRE(r.separable.is_true());
    REQUIRE(r.normal.is_true());
    REQUIRE(r.galois.is_true());
    REQUIRE(*r.aut_order == 1);
    REQUIRE(r.fixed_field_is_K.is_true());
}

TEST_CASE("infinite markers answer only what the annotation carries", "[classify]") {
    Field Q = Field::rationals();
    auto r = classify(Extension{Q, Q.extended_infinite(true), std::nullopt});
    REQUIRE_FALSE(r.degree.has_value());
    REQUIRE(r.finite.is_false());
    REQUIRE(r.algebraic.is_true());
    REQUIRE_FALSE(r.separable.known());
    REQUIRE_FALSE(r.normal.known());
    REQUIRE_FALSE(r.galois.known());
    REQUIRE_FALSE(r.fixed_field_is_K.known());
    auto r2 = classify(Extension{Q, Q.extended_infinite(false), std::nullopt});
    REQUIRE(r2.algebraic.is_false());
}

TEST_CASE("F_16 over F_2 and the degree-6 splitting field", "[classify]") {
    Field F2 = Field::prime(2);
    auto r = classify(make_extension(F2, ip(F2, {1, 1, 0, 0, 1})));
    REQUIRE(*r.degree == 4);
    REQUIRE(r.galois.is_true());
    REQUIRE(r.group_id == "C4");

    Field Q = Field::rationals();
    Field L = splitting_field(ip(Q, {-2, 0, 0, 1}), Q);
    auto r2 = classify(make_step(Q, L));
    REQUIRE(*r2.degree == 6);
    REQUIRE(r2.galois.is_true());
    REQUIRE(r2.group_id == "S3");
    REQUIRE(r2.fixed_field_is_K.is_true());
}

TEST_CASE("automorphism count matches the Galois property on every finite entry",
          "[classify][property]") {
    // |Aut(L/K)| = [L:K] exactly for Galois extensions
    for (const auto& c : builtin_catalog()) {
        Extension E = make_step(c.K, c.L);
        auto r = classify(E);
        if (!r.degree) continue;
        REQUIRE(r.aut_order.has_value());
        REQUIRE(r.galois.known());
        REQUIRE((*r.aut_order == *r.degree) == r.galois.is_true());
    }
}

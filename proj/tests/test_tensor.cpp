#include "helpers.hpp"

#include "composita/tensor.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace composita;
using testutil::ip;

TEST_CASE("separable quadratic: the base change splits as M x M", "[tensor]") {
    Field Q = Field::rationals();
    auto E = make_extension(Q, ip(Q, {-2, 0, 1}));
    auto r = tensor_check(E, true, 0);
    REQUIRE(r.algebra_dim == 2);
    REQUIRE(r.nilradical_dim == 0);
    REQUIRE(r.idempotent_count == 2);
    REQUIRE(r.nilradical_zero);
    REQUIRE(r.all_unit_idem);
    REQUIRE(r.idempotents_span);
    REQUIRE(r.element_mode == "sampled");
    REQUIRE(r.note == "M = splitting field surrogate");
}

TEST_CASE("a wrong expectation trips the consistency assertion", "[tensor]") {
    Field Q = Field::rationals();
    auto E = make_extension(Q, ip(Q, {-2, 0, 1}));
    REQUIRE_THROWS_AS(tensor_check(E, false, 0), internal_error);
}

TEST_CASE("small finite algebra is swept exhaustively", "[tensor]") {
    Field F2 = Field::prime(2);
    auto E = make_extension(F2, ip(F2, {1, 1, 1}));
    auto r = tensor_check(E, true, 0);
    REQUIRE(r.element_mode == "exhaustive");
    REQUIRE(r.elements_tested == 16); // |F_4|^2
    REQUIRE(r.all_unit_idem);
}

TEST_CASE("inseparable quadratic has a one-dimensional nilradical", "[tensor]") {
    Field K = Field::rational_functions(2);
    auto E = make_extension(K, Poly(K, {K.neg(K.t_generator()), K.zero(), K.one()}));
    auto r = tensor_check(E, false, 0);
    REQUIRE(r.algebra_dim == 2);
    REQUIRE(r.nilradical_dim == 1);
    REQUIRE(r.idempotent_count == 1);
    REQUIRE_FALSE(r.nilradical_zero);
    REQUIRE_FALSE(r.all_unit_idem);
    REQUIRE_FALSE(r.idempotents_span);
}

TEST_CASE("inseparable cubic in characteristic 3", "[tensor]") {
    Field K = Field::rational_functions(3);
    auto E = make_extension(K, Poly(K, {K.neg(K.t_generator()), K.zero(), K.zero(), K.one()}));
    auto r = tensor_check(E, false, 1);
    REQUIRE(r.algebra_dim == 3);
    REQUIRE(r.nilradical_dim == 2);
    REQUIRE(r.idempotent_count == 1);
}

TEST_CASE("separable extension of an imperfect base", "[tensor]") {
    Field K = Field::rational_functions(2);
    auto E = make_extension(K, Poly(K, {K.t_generator(), K.one(), K.one()}));
    auto r = tensor_check(E, true, 0);
    REQUIRE(r.algebra_dim == 2);
    REQUIRE(r.nilradical_dim == 0);
    REQUIRE(r.idempotent_count == 2);
}

TEST_CASE("separable cubic: three blocks over the splitting field", "[tensor]") {
    Field Q = Field::rationals();
    auto E = make_extension(Q, ip(Q, {-2, 0, 0, 1}));
    auto r = tensor_check(E, true, 0);
    REQUIRE(r.algebra_dim == 3);
    REQUIRE(r.nilradical_dim == 0);
    REQUIRE(r.idempotent_count == 3);
}

TEST_CASE("trivial extension", "[tensor]") {
    Field Q = Field::rationals();
    auto r = tensor_check(Extension{Q, Q, 1}, true, 0);
    REQUIRE(r.algebra_dim == 1);
    REQUIRE(r.idempotent_count == 1);
    REQUIRE(r.idempotents_span);
}

TEST_CASE("mixed quotient: nilpotent block next to a reduced one", "[tensor]") {
    // Q[x]/((x-1)^2 (x+2)): nilradical dim 1, two primitive idempotents,
    // elements split as unit * idempotent only off the nilpotent part
    Field Q = Field::rationals();
    Poly xm1 = ip(Q, {-1, 1});
    Poly xp2 = ip(Q, {2, 1});
    Poly f = xm1 * xm1 * xp2;
    TensorAlgebra T{detail::quotient_algebra(f), Q, Q, f, f,
                    FactorList{{xm1, 2}, {xp2, 1}}, "M = splitting field surrogate"};
    REQUIRE(nilradical(T.A).size() == 1);
    auto prim = idempotents(T);
    REQUIRE(prim.size() == 2);

    Poly nilp = xm1 * xp2;
    AlgElem a(3, Q.zero());
    for (int i = 0; i <= nilp.deg(); ++i) a[std::size_t(i)] = nilp.at(std::size_t(i));
    REQUIRE_FALSE(unit_times_idempotent(T, prim, a).exists);
    REQUIRE_FALSE(splits_as_unit_idem(T, a));

    AlgElem xe(3, Q.zero());
    xe[1] = Q.one();
    auto ui = unit_times_idempotent(T, prim, xe);
    REQUIRE(ui.exists);
    REQUIRE(ui.idem == T.A.one); // x is a global unit here
    REQUIRE(splits_as_unit_idem(T, xe));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "homalg/quiver.hpp"

using namespace homalg;

namespace {

AlgebraPresentation dual_numbers(std::uint32_t p) {
    AlgebraPresentation pres;
    pres.field = Field(p);
    pres.quiver = {1, {{0, 0, "x"}}};
    pres.relations = {{{{1, {0, 0}}}}};
    pres.nilpotency_bound = 2;
    pres.name = "k[x]/(x^2)";
    return pres;
}

AlgebraPresentation a2(std::uint32_t p) {
    AlgebraPresentation pres;
    pres.field = Field(p);
    pres.quiver = {2, {{0, 1, "a"}}};
    pres.nilpotency_bound = 2;
    pres.name = "A2";
    return pres;
}

}  // namespace

TEST_CASE("dual numbers have basis {1, x}") {
    for (std::uint32_t p : {2u, 3u}) {
        auto alg = build_algebra(dual_numbers(p));
        CHECK(alg->dimension() == 2);
        CHECK(alg->basis_path(0).length() == 0);
        CHECK(alg->basis_path(1).length() == 1);
        // x * x reduces to zero.
        CHECK(alg->reduce_word({0, 0}).empty());
    }
}

TEST_CASE("linear A2 quiver has basis {e1, e2, a}") {
    auto alg = build_algebra(a2(2));
    CHECK(alg->dimension() == 3);
    CHECK(alg->basis_at_source(0).size() == 2);  // e1 and a
    CHECK(alg->basis_at_source(1).size() == 1);  // e2
}

TEST_CASE("a loop without relations is rejected as infinite-dimensional") {
    AlgebraPresentation pres;
    pres.field = Field(2);
    pres.quiver = {1, {{0, 0, "x"}}};
    pres.nilpotency_bound = 4;
    CHECK_THROWS_AS(build_algebra(pres), check_failure);
}

TEST_CASE("two-vertex cyclic quiver with length-2 relations") {
    AlgebraPresentation pres;
    pres.field = Field(3);
    pres.quiver = {2, {{0, 1, "a"}, {1, 0, "b"}}};
    pres.relations = {{{{1, {0, 1}}}}, {{{1, {1, 0}}}}};  // ab and ba
    pres.nilpotency_bound = 2;
    auto alg = build_algebra(pres);
    CHECK(alg->dimension() == 4);  // e1, e2, a, b
}

TEST_CASE("mixed-length relations on the cyclic quiver") {
    // Relations bab (length 3) and abab (length 4) leave basis
    // e1, e2, a, b, ab, ba, aba; abab is redundant since bab divides it.
    AlgebraPresentation pres;
    pres.field = Field(2);
    pres.quiver = {2, {{0, 1, "a"}, {1, 0, "b"}}};
    pres.relations = {{{{1, {1, 0, 1}}}}, {{{1, {0, 1, 0, 1}}}}};
    pres.nilpotency_bound = 4;
    CHECK(build_algebra(pres)->dimension() == 7);

    AlgebraPresentation redundant_dropped = pres;
    redundant_dropped.relations.pop_back();
    CHECK(build_algebra(redundant_dropped)->dimension() == 7);

    // abab alone does not reach baba, so no nilpotency bound holds.
    AlgebraPresentation only_long = pres;
    only_long.relations.erase(only_long.relations.begin());
    CHECK_THROWS_AS(build_algebra(only_long), check_failure);
}

TEST_CASE("commutative two-loop algebra k[x,y]/(x2, y2, xy - yx)") {
    AlgebraPresentation pres;
    pres.field = Field(3);
    pres.quiver = {1, {{0, 0, "x"}, {0, 0, "y"}}};
    pres.relations = {
        {{{1, {0, 0}}}},
        {{{1, {1, 1}}}},
        {{{1, {0, 1}}, {2, {1, 0}}}},  // xy - yx over GF(3)
    };
    pres.nilpotency_bound = 3;
    auto alg = build_algebra(pres);
    CHECK(alg->dimension() == 4);  // 1, x, y, xy
}

TEST_CASE("opposite presentation is an involution and builds") {
    auto pres = dual_numbers(3);
    auto op = opposite_presentation(pres);
    auto back = opposite_presentation(op);
    CHECK(back.quiver == pres.quiver);
    CHECK(back.relations[0].terms[0].arrows == pres.relations[0].terms[0].arrows);
    CHECK(build_algebra(op)->dimension() == 2);

    AlgebraPresentation nak;
    nak.field = Field(2);
    nak.quiver = {2, {{0, 1, "a"}, {1, 0, "b"}}};
    nak.relations = {{{{1, {1, 0, 1}}}}, {{{1, {0, 1, 0, 1}}}}};
    nak.nilpotency_bound = 4;
    auto nop = build_algebra(opposite_presentation(nak));
    CHECK(nop->dimension() == build_algebra(nak)->dimension());
}

TEST_CASE("malformed presentations are rejected") {
    AlgebraPresentation pres;
    pres.field = Field(2);
    pres.quiver = {2, {{0, 1, "a"}, {1, 0, "b"}}};
    pres.nilpotency_bound = 2;
    pres.relations = {{{{1, {0}}}}};  // length-1 term
    CHECK_THROWS_AS(build_algebra(pres), bad_input);
    pres.relations = {{{{1, {0, 0}}}}};  // not composable
    CHECK_THROWS_AS(build_algebra(pres), bad_input);
    pres.relations = {{{{1, {0, 1}}, {1, {1, 0}}}}};  // not parallel
    CHECK_THROWS_AS(build_algebra(pres), bad_input);
}

#include "doctest.h"
#include "fixtures.hpp"
#include "qha/algebra.hpp"

using namespace qha;
using namespace qha::fixtures;

TEST_CASE("a2 path algebra has dimension 3") {
    ModulusGuard g(101);
    QuiverAlgebra qa = a2();
    CHECK(qa.alg->dim == 3);
    CHECK(qa.alg->idems.size() == 2);
    CHECK(qa.alg->radical.size() == 1);
    qa.alg->validate();
}

TEST_CASE("dual numbers k[x]/(x^2)") {
    ModulusGuard g(101);
    QuiverAlgebra qa = dual_numbers();
    CHECK(qa.alg->dim == 2);
    CHECK(qa.alg->radical.size() == 1);
    qa.alg->validate();
    // x * x = 0
    Vec x = qa.alg->basis_elem(1);
    Vec sq = qa.alg->mul(x, x);
    for (i64 v : sq) CHECK(v == 0);
}

TEST_CASE("loop without relations exceeds the cap") {
    ModulusGuard g(101);
    Quiver q{{"1"}, {{"x", "1", "1"}}};
    CHECK_THROWS_WITH_AS(build_algebra(q, {}, 6), doctest::Contains("cap exceeded"),
                         std::runtime_error);
}

TEST_CASE("relation of length one is rejected") {
    ModulusGuard g(101);
    Quiver q{{"1", "2"}, {{"a", "1", "2"}}};
    Path p;
    p.source_vertex = 0;
    p.arrows = {0};
    CHECK_THROWS_WITH_AS(build_algebra(q, {Relation{{{1, p}}}}, 6),
                         doctest::Contains("not admissible"), std::runtime_error);
}

TEST_CASE("nine-dimensional example and its corners") {
    ModulusGuard g(101);
    QuiverAlgebra qa = example45();
    CHECK(qa.alg->dim == 9);
    qa.alg->validate();

    AlgebraPtr A = corner(*qa.alg, {"2", "3", "4"});
    CHECK(A->dim == 6);
    A->validate();
    CHECK(A->idems.size() == 3);
    CHECK(A->radical.size() == 3);  // be, ga, de; rad^2 = 0

    AlgebraPtr B = corner(*qa.alg, {"1"});
    CHECK(B->dim == 1);
    B->validate();
}

TEST_CASE("thirteen-dimensional example") {
    ModulusGuard g(101);
    QuiverAlgebra qa = example47a();
    CHECK(qa.alg->dim == 13);
    qa.alg->validate();
    AlgebraPtr A = corner(*qa.alg, {"1", "2"});
    CHECK(A->dim == 3);  // e1, e2, al: an A2 corner
    AlgebraPtr B = corner(*qa.alg, {"3", "4", "5"});
    CHECK(B->dim == 6);  // e3, e4, e5, be, bp, th
    B->validate();
}

TEST_CASE("fourteen-dimensional variant") {
    ModulusGuard g(101);
    QuiverAlgebra qa = example47b();
    CHECK(qa.alg->dim == 14);
    qa.alg->validate();
    AlgebraPtr A = corner(*qa.alg, {"1", "2"});
    CHECK(A->dim == 4);  // e1, e2, al, ap
    A->validate();
}

TEST_CASE("opposite algebra round trip") {
    ModulusGuard g(101);
    QuiverAlgebra qa = example45();
    AlgebraPtr op = opposite(*qa.alg);
    op->validate();
    CHECK(op->dim == qa.alg->dim);
    AlgebraPtr opop = opposite(*op);
    CHECK(opop->same_tables(*qa.alg));
}

TEST_CASE("algebras over F_2") {
    ModulusGuard g(2);
    QuiverAlgebra qa = example45();
    CHECK(qa.alg->dim == 9);
    qa.alg->validate();
    CHECK(qa.alg->modulus == 2);
}

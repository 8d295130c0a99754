#include "doctest.h"
#include "fixtures.hpp"
#include "qha/module.hpp"

using namespace qha;
using namespace qha::fixtures;

TEST_CASE("regular module and simples over a2") {
    ModulusGuard g(101);
    AlgebraPtr R = a2().alg;
    Module reg = Module::regular(R);
    CHECK(reg.dim == 3);
    reg.validate();

    auto ss = simples(R);
    REQUIRE(ss.size() == 2);
    for (const auto& s : ss) {
        CHECK(s.dim == 1);
        s.validate();
    }

    Module p1 = projective(R, "1");
    Module p2 = projective(R, "2");
    CHECK(p1.dim == 2);
    CHECK(p2.dim == 1);
    p1.validate();
    p2.validate();
    CHECK(is_projective(p1));
    CHECK(is_projective(p2));
    CHECK_FALSE(is_projective(simple_at(R, "1")));
    CHECK(is_projective(simple_at(R, "2")));
}

TEST_CASE("hom spaces over a2") {
    ModulusGuard g(101);
    AlgebraPtr R = a2().alg;
    Module p1 = projective(R, "1");
    Module s1 = simple_at(R, "1");
    Module s2 = simple_at(R, "2");
    CHECK(hom_space(p1, s2).empty());      // Hom(P(1), S(2)) = 0
    CHECK(hom_space(p1, s1).size() == 1);  // the cover
    CHECK(hom_space(s1, s2).empty());
    CHECK(hom_space(p1, p1).size() == 1);  // local endomorphism ring
    for (const auto& f : hom_space(p1, Module::regular(R))) f.validate();
    CHECK(hom_space(p1, Module::regular(R)).size() == 1);  // e1*R = {e1}
}

TEST_CASE("kernel image cokernel of a cover") {
    ModulusGuard g(101);
    AlgebraPtr R = a2().alg;
    Module p1 = projective(R, "1");
    Module s1 = simple_at(R, "1");
    Cover c = projective_cover(s1);
    CHECK(c.proj_module.dim == p1.dim);
    REQUIRE(c.multiplicities.size() == 1);
    CHECK(c.multiplicities[0] == std::pair<std::string, int>{"1", 1});
    c.epi.validate();

    Submodule ker = kernel(c.epi);
    CHECK(ker.module.dim == 1);
    ker.incl.validate();
    Quotient coker = cokernel(c.epi);
    CHECK(coker.module.dim == 0);
    Submodule im = image(c.epi);
    CHECK(im.module.dim == 1);
}

TEST_CASE("radical of the regular module") {
    ModulusGuard g(101);
    AlgebraPtr R = example45().alg;
    Module reg = Module::regular(R);
    Submodule rad = radical_of(reg);
    CHECK(rad.module.dim == 5);  // al, be, ga, de, be*al
    rad.incl.validate();
}

TEST_CASE("dual exchanges projective and injective behaviour") {
    ModulusGuard g(101);
    AlgebraPtr R = a2().alg;
    Module s2 = simple_at(R, "2");
    Module d = dual(s2);
    CHECK(d.dim == 1);
    d.validate();
    CHECK(d.alg->same_tables(*opposite(*R)));
}

TEST_CASE("tensor with the regular bimodule is the identity") {
    ModulusGuard g(101);
    AlgebraPtr R = a2().alg;
    AlgebraPtr Rop = opposite(*R);
    Module reg_right = Module::regular(Rop);  // R as right R-module
    Module p1 = projective(R, "1");
    TensorResult t = tensor_space(reg_right, p1);
    CHECK(t.dim == p1.dim);  // R (x)_R P ~ P
    CHECK(t.proj.rows == t.dim);
    CHECK((t.proj * t.section) == Mat::identity(t.dim));
}

TEST_CASE("bimodule tensor descends the left action") {
    ModulusGuard g(101);
    AlgebraPtr R = a2().alg;
    Bimodule rr;  // R as R-R-bimodule
    rr.left_alg = R;
    rr.right_alg = R;
    rr.dim = R->dim;
    for (int i = 0; i < R->dim; ++i) {
        rr.left_action.push_back(R->left_mult(R->basis_elem(i)));
        rr.right_action.push_back(R->right_mult(R->basis_elem(i)));
    }
    rr.validate();
    Module p1 = projective(R, "1");
    BimoduleTensor bt = tensor(rr, p1);
    bt.module.validate();
    CHECK(bt.module.dim == p1.dim);
    CHECK(is_isomorphic(bt.module, p1).kind == IsoResult::Yes);
}

TEST_CASE("isomorphism testing") {
    ModulusGuard g(101);
    AlgebraPtr R = a2().alg;
    Module p1 = projective(R, "1");
    Module s1 = simple_at(R, "1");
    Module s2 = simple_at(R, "2");

    IsoResult yes = is_isomorphic(p1, p1);
    REQUIRE(yes.kind == IsoResult::Yes);
    yes.witness->validate();
    CHECK(inverse(yes.witness->mat).has_value());

    CHECK(is_isomorphic(p1, s1).kind == IsoResult::No);  // dim mismatch
    CHECK(is_isomorphic(s1, s2).kind == IsoResult::No);  // hom vanishes

    Module sum12 = Module::direct_sum({s1, s2});
    Module sum21 = Module::direct_sum({s2, s1});
    CHECK(is_isomorphic(sum12, sum21).kind == IsoResult::Yes);
}

TEST_CASE("span submodule closes under the action") {
    ModulusGuard g(101);
    AlgebraPtr R = example45().alg;
    Module reg = Module::regular(R);
    // R*e_2 = paths with source 2: e_2 and be
    Vec e2(reg.dim, 0);
    int pos = -1;
    for (int i = 0; i < R->dim; ++i)
        if (R->basis_names[i] == "e_2") pos = i;
    REQUIRE(pos >= 0);
    e2[pos] = 1;
    Submodule sub = span_submodule(reg, {e2});
    CHECK(sub.module.dim == 2);  // e2 and be
    sub.incl.validate();
}

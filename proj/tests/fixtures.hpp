#ifndef QHA_TEST_FIXTURES_HPP
#define QHA_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "qha/algebra.hpp"

namespace qha::fixtures {

/// Restores the global modulus on scope exit.
struct ModulusGuard {
    i64 saved;
    explicit ModulusGuard(i64 p) : saved(fp::modulus()) { fp::set_modulus(p); }
    ~ModulusGuard() { fp::set_modulus(saved); }
};

/// Path from arrow names listed in application order (first entry acts first).
inline Path mk_path(const Quiver& q, const std::vector<std::string>& arrows_applied) {
    Path p;
    p.arrows.reserve(arrows_applied.size());
    for (const auto& name : arrows_applied) p.arrows.push_back(q.arrow_index(name));
    p.source_vertex = q.vertex_index(q.arrows[p.arrows.front()].source);
    return p;
}

inline Relation mono(const Quiver& q, const std::vector<std::string>& arrows_applied) {
    return Relation{{{1, mk_path(q, arrows_applied)}}};
}

/// Path algebra of 1 --a--> 2, no relations. dim 3.
inline QuiverAlgebra a2() {
    Quiver q{{"1", "2"}, {{"a", "1", "2"}}};
    return build_algebra(q, {}, 12);
}

/// k[x]/(x^2). dim 2.
inline QuiverAlgebra dual_numbers() {
    Quiver q{{"1"}, {{"x", "1", "1"}}};
    return build_algebra(q, {mono(q, {"x", "x"})}, 12);
}

/// Quiver 1 --al--> 2 --be--> 3, be:2->3, ga:3->2, de:3->4 with relations
/// be*ga, ga*be, de*be. dim 9, basis e1..e4, al, be, ga, de, be*al.
inline QuiverAlgebra example45() {
    Quiver q{{"1", "2", "3", "4"},
             {{"al", "1", "2"}, {"be", "2", "3"}, {"ga", "3", "2"}, {"de", "3", "4"}}};
    std::vector<Relation> rels = {mono(q, {"ga", "be"}),   // be*ga
                                  mono(q, {"be", "ga"}),   // ga*be
                                  mono(q, {"be", "de"})};  // de*be
    return build_algebra(q, rels, 12);
}

/// First algebra of the pair of 13-dimensional examples: arrows al:1->2,
/// ga:3->1, de:4->2, be:3->4, bp:4->3, th:4->5; relations bp*be, be*bp,
/// th*be, al*ga - de*be.
inline QuiverAlgebra example47a() {
    Quiver q{{"1", "2", "3", "4", "5"},
             {{"al", "1", "2"},
              {"ga", "3", "1"},
              {"de", "4", "2"},
              {"be", "3", "4"},
              {"bp", "4", "3"},
              {"th", "4", "5"}}};
    std::vector<Relation> rels = {mono(q, {"be", "bp"}),  // bp*be
                                  mono(q, {"bp", "be"}),  // be*bp
                                  mono(q, {"be", "th"}),  // th*be
                                  Relation{{{1, mk_path(q, {"ga", "al"})},
                                            {-1, mk_path(q, {"be", "de"})}}}};
    return build_algebra(q, rels, 12);
}

/// Variant with an extra arrow ap:2->1 and relations ap*al, al*ap,
/// ap*de - ga*bp. dim 14; the corner on {1,2} is self-injective.
inline QuiverAlgebra example47b() {
    Quiver q{{"1", "2", "3", "4", "5"},
             {{"al", "1", "2"},
              {"ap", "2", "1"},
              {"ga", "3", "1"},
              {"de", "4", "2"},
              {"be", "3", "4"},
              {"bp", "4", "3"},
              {"th", "4", "5"}}};
    std::vector<Relation> rels = {mono(q, {"al", "ap"}),  // ap*al
                                  mono(q, {"ap", "al"}),  // al*ap
                                  mono(q, {"be", "bp"}),
                                  mono(q, {"bp", "be"}),
                                  mono(q, {"be", "th"}),
                                  Relation{{{1, mk_path(q, {"ga", "al"})},
                                            {-1, mk_path(q, {"be", "de"})}}},
                                  Relation{{{1, mk_path(q, {"de", "ap"})},
                                            {-1, mk_path(q, {"bp", "ga"})}}}};
    return build_algebra(q, rels, 12);
}

}  // namespace qha::fixtures

#endif

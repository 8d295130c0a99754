#ifndef QHA_ALGEBRA_HPP
#define QHA_ALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "qha/fp.hpp"

namespace qha {

struct Quiver {
    struct Arrow {
        std::string name;
        std::string source;
        std::string target;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& v) const;
    int arrow_index(const std::string& a) const;
    void validate() const;
};

/// A path stores its arrow indices in order of application (rightmost factor
/// first). "a*b" in relation syntax means "b then a", so the stored sequence
/// for a*b is {b, a}.
struct Path {
    int source_vertex = -1;  // index into quiver vertices
    std::vector<int> arrows;  // application order

    int length() const { return static_cast<int>(arrows.size()); }
    int target(const Quiver& q) const;
    bool operator==(const Path& o) const { return source_vertex == o.source_vertex && arrows == o.arrows; }
    std::string label(const Quiver& q) const;
};

struct Relation {
    struct Term {
        i64 coeff;
        Path path;
    };
    std::vector<Term> terms;
};

/// Basis-indexed finite-dimensional algebra with structure constants,
/// designated primitive idempotents and radical.
struct FDAlgebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    // product[i][j] = expansion of b_i * b_j in the basis
    std::vector<std::vector<Vec>> product;
    Vec unit;
    struct Idem {
        std::string vertex;
        Vec elem;
    };
    std::vector<Idem> idems;
    std::vector<Vec> radical;  // row-reduced spanning vectors
    i64 modulus = 0;           // prime in effect at construction

    Vec mul(const Vec& a, const Vec& b) const;
    Mat left_mult(const Vec& a) const;   // x -> a*x
    Mat right_mult(const Vec& a) const;  // x -> x*a
    Vec basis_elem(int i) const;
    Vec idempotent_sum(const std::vector<std::string>& vertices) const;
    int vertex_pos(const std::string& v) const;

    /// Associativity, unit laws, idempotent orthogonality, radical ideal +
    /// nilpotency. Throws std::runtime_error on failure.
    void validate() const;

    bool same_tables(const FDAlgebra& o) const;
};

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

/// Quotient of a path algebra by an admissible relation ideal, with the path
/// residues that survived as basis.
struct QuiverAlgebra {
    Quiver quiver;
    AlgebraPtr alg;
    std::vector<Path> basis_paths;  // parallel to alg->basis_names
    int length_cap = 0;
};

/// Throws "not admissible" when a relation term has length < 2, "cap exceeded"
/// when a path of length length_cap survives modulo the ideal.
QuiverAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels, int length_cap);

/// Corner algebra eRe for e the sum of the named vertex idempotents.
AlgebraPtr corner(const FDAlgebra& r, const std::vector<std::string>& vertices);

/// Corner algebra together with its embedding into the ambient algebra:
/// column c of `embed` is the ambient coordinate vector of corner basis c.
struct CornerData {
    AlgebraPtr alg;
    Mat embed;
};
CornerData corner_data(const FDAlgebra& r, const std::vector<std::string>& vertices);

AlgebraPtr opposite(const FDAlgebra& r);

}  // namespace qha

#endif

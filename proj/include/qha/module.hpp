#ifndef QHA_MODULE_HPP
#define QHA_MODULE_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qha/algebra.hpp"

namespace qha {

/// Finitely generated left module given by one action matrix per algebra
/// basis element.
struct Module {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<Mat> action;  // action[i] = matrix of b_i

    Mat act(const Vec& elem) const;  // action of a general algebra element
    bool is_zero() const { return dim == 0; }
    void validate() const;

    static Module zero(AlgebraPtr a);
    static Module regular(AlgebraPtr a);  // R as a left module over itself
    static Module direct_sum(const std::vector<Module>& parts);
};

struct Morphism {
    Module source;
    Module target;
    Mat mat;  // target.dim x source.dim

    void validate() const;  // intertwining on every basis element
    bool is_zero() const { return mat.is_zero(); }
};

Morphism identity_morphism(const Module& m);
Morphism zero_morphism(const Module& src, const Module& dst);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f

/// A-B-bimodule: commuting left A-action and right B-action. The right
/// action matrices follow the left-module-over-opposite convention:
/// right_action[j] is the matrix of m -> m * b_j.
struct Bimodule {
    AlgebraPtr left_alg;
    AlgebraPtr right_alg;
    int dim = 0;
    std::vector<Mat> left_action;
    std::vector<Mat> right_action;

    Module as_left_module() const;
    Module as_right_module() const;  // left module over opposite(right_alg)
    void validate() const;
};

/// Submodule spanned by the columns of a full-column-rank matrix closed
/// under the action; `module` carries the induced action, `incl` the
/// inclusion morphism.
struct Submodule {
    Module module;
    Morphism incl;
};

/// Quotient by the image of a morphism; `proj` is the projection.
struct Quotient {
    Module module;
    Morphism proj;
};

std::vector<Module> simples(AlgebraPtr r);
Module simple_at(AlgebraPtr r, const std::string& vertex);
Module projective(AlgebraPtr r, const std::string& vertex);

/// Basis of the intertwiner space Hom(M, N).
std::vector<Morphism> hom_space(const Module& m, const Module& n);

Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
Quotient cokernel(const Morphism& f);

/// Submodule spanned by the given ambient vectors, closed under the action.
Submodule span_submodule(const Module& m, const std::vector<Vec>& gens);

Submodule radical_of(const Module& m);

struct Cover {
    Module proj_module;
    Morphism epi;
    std::vector<std::pair<std::string, int>> multiplicities;  // vertex, count
};
Cover projective_cover(const Module& m);

bool is_projective(const Module& m);

/// Module over opposite(R) with transposed action matrices.
Module dual(const Module& m);

/// Tensor product over B of a right B-module (left opposite(B)-module) with a
/// left B-module: plain quotient space with projection data.
struct TensorResult {
    int dim = 0;
    Mat proj;     // (dimM*dimN) -> tensor space; kron coordinates m-major
    Mat section;  // right inverse of proj
};
TensorResult tensor_space(const Module& m_right_as_op, const Module& n);

/// Tensor of an A-B-bimodule with a left B-module; the left A-action descends.
struct BimoduleTensor {
    Module module;  // left A-module M (x)_B N
    TensorResult space;
};
BimoduleTensor tensor(const Bimodule& m, const Module& n);

struct IsoResult {
    enum Kind { Yes, No, Undetermined } kind;
    std::optional<Morphism> witness;  // for Yes
    std::string obstruction;          // for No
};
IsoResult is_isomorphic(const Module& m, const Module& n, int samples, std::mt19937_64& rng);
IsoResult is_isomorphic(const Module& m, const Module& n);  // default 32 samples, fixed seed

}  // namespace qha

#endif

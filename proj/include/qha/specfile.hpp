#ifndef QHA_SPECFILE_HPP
#define QHA_SPECFILE_HPP

#include <map>
#include <string>
#include <vector>

#include "qha/algebra.hpp"
#include "qha/module.hpp"

namespace qha {

/// Named module description: per-vertex dimensions plus per-arrow matrices
/// (rows = dim at target, cols = dim at source; missing entries are zero).
struct SpecModule {
    std::string name;
    std::map<std::string, int> vertex_dims;
    std::map<std::string, Mat> arrow_mats;
};

/// Parsed contents of a line-oriented sectioned .alg file. Sections:
/// field / quiver / relations / idempotents / modules / options.
struct AlgebraSpec {
    i64 p = 101;
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<std::pair<std::string, std::vector<std::string>>> idempotents;
    std::vector<SpecModule> modules;
    int length_cap = 12;
    int bound = 20;
    unsigned long seed = 0;

    const SpecModule* find_module(const std::string& name) const;
    const std::vector<std::string>* find_idempotent(const std::string& name) const;
};

/// Parses `text`; `origin` names the source in error messages. Errors are
/// std::runtime_error with "<origin>:<line>: <message>". Unknown sections and
/// keys are rejected; path expressions are type-checked for composability
/// under the right-to-left convention (a*b = b then a).
AlgebraSpec parse_spec_text(const std::string& text, const std::string& origin);
AlgebraSpec parse_spec_file(const std::string& path);

/// build_algebra with the spec's quiver, relations and length_cap. The caller
/// is responsible for setting the field modulus to spec.p first.
QuiverAlgebra build_spec_algebra(const AlgebraSpec& spec);

/// Realizes a named module over the built algebra: vertex blocks in quiver
/// vertex order, path actions composed from the arrow matrices. Validates the
/// result so matrices violating the relations are rejected.
Module build_spec_module(const QuiverAlgebra& qa, const SpecModule& sm);

}  // namespace qha

#endif

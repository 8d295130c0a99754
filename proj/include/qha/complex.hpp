#ifndef QHA_COMPLEX_HPP
#define QHA_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "qha/gproj.hpp"
#include "qha/resolution.hpp"

namespace qha {

/// Bounded cochain complex ... -> X^i -> X^{i+1} -> ... with differentials
/// raising degree; terms[k] sits in degree lo + k.
struct ChainComplex {
    AlgebraPtr alg;
    int lo = 0;
    std::vector<Module> terms;
    std::vector<Mat> diffs;  // diffs[k]: terms[k] -> terms[k+1]

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    Module term(int degree) const;  // zero module outside the stored range
    Mat diff(int degree) const;     // matrix of d^degree

    /// d o d = 0 and every differential is a module morphism.
    void validate() const;

    static ChainComplex stalk(const Module& m, int degree);
};

/// Chain map f: X -> Y given degreewise; mats[k] acts in degree lo + k.
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    int lo = 0;
    std::vector<Mat> mats;

    Mat mat(int degree) const;  // zero matrix outside the stored range
    void validate() const;      // morphism + commutation with differentials
};

/// Mapping cone with d = [[-d_X shifted, 0], [f, d_Y]]; Cone^i = X^{i+1} + Y^i.
ChainComplex cone(const ChainMap& f);

/// Brutal truncation keeping degrees >= n.
ChainComplex truncate_geq(const ChainComplex& x, int n);

Module homology(const ChainComplex& x, int n);

/// Number of nonzero terms.
int complex_length(const ChainComplex& x);

bool is_acyclic(const ChainComplex& x);

/// Bounded-above termwise-projective replacement built with minimal covers of
/// pullbacks, down to degree lo - bound, with a quasi-isomorphism into x.
struct ResolvedComplex {
    ChainComplex proj;
    ChainMap to_x;
};
ResolvedComplex resolve_complex(const ChainComplex& x, int bound);

/// Membership of the fgp subcategory: a complex lies in it iff the cycle
/// module just below the lowest nonzero homology degree of its projective
/// replacement has finite Gorenstein projective dimension.
struct FgpVerdict {
    enum Kind { Yes, No, Unknown } kind = Unknown;
    bool acyclic = false;
    int threshold = 0;        // the degree t used
    DimValue cycle_gpd;       // gpd of Z^t of the replacement
    int bound = 0;
    std::string detail;
};
FgpVerdict in_fgp(const ChainComplex& x, int bound);

}  // namespace qha

#endif

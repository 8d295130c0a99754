#ifndef QHA_GPROJ_HPP
#define QHA_GPROJ_HPP

#include <optional>
#include <string>
#include <vector>

#include "qha/resolution.hpp"

namespace qha {

/// Certified decision for "M is Gorenstein projective".
///
/// YES is certified either by projectivity or by a periodicity certificate at
/// (i, j) together with Ext^k(M, R) = 0 for 1 <= k <= j; by the dimension
/// shift Ext^k(Omega^m M, R) = Ext^{k+m}(M, R) and the folding
/// Ext^k = Ext^{k-period} for k > j this makes the doubly-infinite periodic
/// complex totally acyclic and forces Gpd M = sup{k : Ext^k(M,R) != 0} = 0.
///
/// NO is certified by a nonzero Ext^k(M, R) with k >= 1, or by failure of the
/// evaluation map M -> Hom(Hom(M,R),R) to be bijective.
struct GprojVerdict {
    enum Kind { Yes, No, Unknown } kind = Unknown;
    bool projective = false;                            // yes via pd = 0
    std::optional<PeriodicityCertificate> periodicity;  // yes via periodicity
    int ext_window = 0;    // yes: Ext^k(M,R) = 0 verified for 1..ext_window
    int ext_witness = 0;   // no: least k >= 1 with Ext^k(M,R) != 0
    int ext_witness_dim = 0;
    bool reflexivity_failure = false;
    int bound = 0;
    std::string detail;
};

GprojVerdict gproj_check(const Module& m, int bound);

/// Gorenstein projective dimension with the same soundness regime as pd:
/// finite values are exact, infinite values carry a periodicity certificate
/// whose cycle module is certified non-Gorenstein-projective.
DimValue gpd(const Module& m, int bound);

/// Finite proxy for "all Gorenstein projective modules": the indecomposable
/// projectives plus every syzygy of a simple certified Gproj, deduplicated up
/// to isomorphism. Not a classification.
std::vector<Module> gproj_test_set(AlgebraPtr r, int bound);

/// Is the canonical evaluation M -> Hom(Hom(M,R),R) bijective?
bool is_reflexive(const Module& m);

struct CmFreeVerdict {
    enum Kind { Certified, Evidence, Refuted } kind = Evidence;
    std::string reason;
    int test_set_size = 0;
    std::optional<Module> witness;  // Refuted: non-projective Gproj module
};

/// Chen's criterion certifies CM-freeness for connected radical-square-zero
/// algebras that are not self-injective; otherwise the Gproj test set is
/// scanned for a non-projective certified witness.
CmFreeVerdict cm_free_check(AlgebraPtr r, int bound);

}  // namespace qha

#endif

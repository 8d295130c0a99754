#ifndef QHA_RESOLUTION_HPP
#define QHA_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "qha/module.hpp"

namespace qha {

/// Witnessed isomorphism between two syzygies of the same module.
struct PeriodicityCertificate {
    int i = 0;
    int j = 0;            // i < j, Omega^i ~ Omega^j
    Morphism witness;     // invertible intertwiner Omega^i -> Omega^j
    int period() const { return j - i; }
};

struct DimValue {
    enum Kind { Finite, Infinite, Unknown } kind = Unknown;
    int value = 0;  // meaningful for Finite
    int bound = 0;
    std::optional<PeriodicityCertificate> cert;  // for Infinite

    static DimValue finite(int n, int bound) { return {Finite, n, bound, std::nullopt}; }
    static DimValue infinite(PeriodicityCertificate c, int bound) { return {Infinite, 0, bound, std::move(c)}; }
    static DimValue unknown(int bound) { return {Unknown, 0, bound, std::nullopt}; }
    bool is_finite() const { return kind == Finite; }
    std::string str() const;
};

/// Minimal projective resolution computed to a bound, with syzygy list and
/// any detected periodicity.
struct Resolution {
    Module target;
    std::vector<Module> terms;      // P_0 .. P_len
    std::vector<Morphism> diffs;    // diffs[k] = d_{k+1}: P_{k+1} -> P_k
    Morphism augment;               // P_0 ->> target
    std::vector<Module> syzygies;   // Omega^0 = target, Omega^1, ...
    std::optional<PeriodicityCertificate> periodicity;
    bool terminated = false;        // reached Omega^n = 0
    int bound = 0;

    int length() const { return static_cast<int>(terms.size()) - 1; }
    /// Exactness and minimality re-validation; throws on failure.
    void validate() const;
};

/// Resolves `bound`+1 steps (or stops early at a zero syzygy); periodicity is
/// detected by pairwise isomorphism testing of syzygies.
Resolution min_resolution(const Module& m, int bound);

DimValue pd(const Module& m, int bound);
DimValue pd_from(const Resolution& res);

/// Ext^i(M, N) dimensions for 0 <= i <= maxk, computed from a resolution of M.
std::vector<int> ext_dims(const Resolution& res_of_m, const Module& n, int maxk);
int ext(const Module& m, const Module& n, int i, int bound);

/// Tor_i^B(M, N) for M a right B-module given over opposite(B), N left.
std::vector<int> tor_dims(const Module& m_right_as_op, const Resolution& res_of_n, int maxk);
int tor(const Module& m_right_as_op, const Module& n, int i, int bound);

DimValue injective_dim(const Module& m, int bound);
DimValue global_dim(AlgebraPtr r, int bound);

struct GorensteinVerdict {
    enum Kind { Yes, No, Unknown } kind = Unknown;
    DimValue left;
    DimValue right;
    std::string failing_side;  // "left" or "right" for No
};
GorensteinVerdict gorenstein_check(AlgebraPtr r, int bound);

}  // namespace qha

#endif

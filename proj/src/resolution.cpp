#include "qha/resolution.hpp"

#include <stdexcept>

namespace qha {

std::string DimValue::str() const {
    switch (kind) {
        case Finite: return "finite:" + std::to_string(value);
        case Infinite: return "infinite";
        default: return "unknown";
    }
}

void Resolution::validate() const {
    augment.validate();
    for (const auto& d : diffs) d.validate();
    // augmentation surjective with kernel = image(d_1)
    if (rank(augment.mat) != target.dim) throw std::runtime_error("resolution: augmentation not surjective");
    if (!diffs.empty()) {
        if (!(augment.mat * diffs[0].mat).is_zero()) throw std::runtime_error("resolution: aug o d1 != 0");
        if (rank(diffs[0].mat) != terms[0].dim - target.dim)
            throw std::runtime_error("resolution: not exact at P_0");
    }
    for (size_t k = 1; k < diffs.size(); ++k) {
        if (!(diffs[k - 1].mat * diffs[k].mat).is_zero()) throw std::runtime_error("resolution: d o d != 0");
        int ker = terms[k].dim - rank(diffs[k - 1].mat);
        if (rank(diffs[k].mat) != ker) throw std::runtime_error("resolution: not exact in the middle");
    }
    // minimality: im(d_{k+1}) inside rad(P_k)
    for (size_t k = 0; k < diffs.size(); ++k) {
        Submodule rad = radical_of(terms[k]);
        Mat aug_cols(terms[k].dim, rad.incl.mat.cols + diffs[k].mat.cols);
        for (int c = 0; c < rad.incl.mat.cols; ++c)
            for (int r = 0; r < terms[k].dim; ++r) aug_cols.at(r, c) = rad.incl.mat.at(r, c);
        for (int c = 0; c < diffs[k].mat.cols; ++c)
            for (int r = 0; r < terms[k].dim; ++r) aug_cols.at(r, rad.incl.mat.cols + c) = diffs[k].mat.at(r, c);
        if (rank(aug_cols) != rank(rad.incl.mat)) throw std::runtime_error("resolution: not minimal");
    }
}

Resolution min_resolution(const Module& m, int bound) {
    Resolution res;
    res.target = m;
    res.bound = bound;
    res.syzygies.push_back(m);

    Module current = m;          // Omega^n, as an abstract module
    Morphism incl_prev;          // Omega^n -> P_{n-1}
    for (int n = 0; n <= bound + 1; ++n) {
        if (current.dim == 0) {
            res.terminated = true;
            break;
        }
        Cover cover = projective_cover(current);
        res.terms.push_back(cover.proj_module);
        if (n == 0) {
            res.augment = cover.epi;
        } else {
            res.diffs.push_back(Morphism{cover.proj_module, res.terms[n - 1], incl_prev.mat * cover.epi.mat});
        }
        Submodule ker = kernel(cover.epi);
        incl_prev = ker.incl;
        current = ker.module;
        res.syzygies.push_back(current);
        // periodicity detection against all earlier syzygies
        if (!res.periodicity && current.dim > 0) {
            for (size_t i = 0; i + 1 < res.syzygies.size(); ++i) {
                if (res.syzygies[i].dim != current.dim) continue;
                IsoResult iso = is_isomorphic(res.syzygies[i], current);
                if (iso.kind == IsoResult::Yes) {
                    res.periodicity = PeriodicityCertificate{static_cast<int>(i),
                                                             static_cast<int>(res.syzygies.size()) - 1,
                                                             *iso.witness};
                    break;
                }
            }
        }
    }
    return res;
}

DimValue pd_from(const Resolution& res) {
    if (res.terminated) return DimValue::finite(std::max(0, static_cast<int>(res.terms.size()) - 1), res.bound);
    if (res.periodicity) return DimValue::infinite(*res.periodicity, res.bound);
    return DimValue::unknown(res.bound);
}

DimValue pd(const Module& m, int bound) { return pd_from(min_resolution(m, bound)); }

namespace {

Mat vectorize_columns(const std::vector<Morphism>& basis) {
    if (basis.empty()) return Mat(0, 0);
    int sz = basis[0].mat.rows * basis[0].mat.cols;
    Mat out(sz, static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
        for (int i = 0; i < sz; ++i) out.at(i, static_cast<int>(c)) = basis[c].mat.data[i];
    return out;
}

}  // namespace

std::vector<int> ext_dims(const Resolution& res, const Module& n, int maxk) {
    // Without termination, degree length() would need the absent next
    // differential; only degrees < length() are exact.
    if (maxk >= res.length() && !res.terminated)
        throw std::runtime_error("ext: resolution shorter than requested degree");
    // hom complex data per degree
    std::vector<std::vector<Morphism>> hom;
    int top = std::min(maxk + 1, res.length());
    for (int k = 0; k <= top; ++k) hom.push_back(hom_space(res.terms[k], n));
    auto homdim = [&](int k) { return k <= top ? static_cast<int>(hom[k].size()) : 0; };
    // delta^k: Hom(P_k, N) -> Hom(P_{k+1}, N)
    auto delta_rank = [&](int k) -> int {
        if (k < 0 || k >= top) return 0;  // P_{k+1} zero or out of range
        if (hom[k].empty() || hom[k + 1].empty()) return 0;
        Mat target_basis = vectorize_columns(hom[k + 1]);
        Mat delta(static_cast<int>(hom[k + 1].size()), static_cast<int>(hom[k].size()));
        for (size_t c = 0; c < hom[k].size(); ++c) {
            Mat composed = hom[k][c].mat * res.diffs[k].mat;
            Vec vec(composed.data.begin(), composed.data.end());
            auto coords = solve(target_basis, vec);
            if (!coords) throw std::runtime_error("internal: hom composition outside hom space");
            for (int r = 0; r < delta.rows; ++r) delta.at(r, static_cast<int>(c)) = (*coords)[r];
        }
        return rank(delta);
    };
    std::vector<int> ranks(top + 1, 0);
    for (int k = 0; k <= top; ++k) ranks[k] = delta_rank(k);
    auto rank_at = [&](int k) { return (k >= 0 && k <= top) ? ranks[k] : 0; };
    std::vector<int> out;
    for (int k = 0; k <= maxk; ++k) out.push_back(homdim(k) - rank_at(k) - rank_at(k - 1));
    return out;
}

int ext(const Module& m, const Module& n, int i, int bound) {
    if (i < 0) throw std::invalid_argument("ext: negative degree");
    Resolution res = min_resolution(m, std::max(bound, i));
    if (res.terminated && i > res.length()) return 0;
    return ext_dims(res, n, i)[i];
}

std::vector<int> tor_dims(const Module& m_right_as_op, const Resolution& res, int maxk) {
    if (maxk >= res.length() && !res.terminated)
        throw std::runtime_error("tor: resolution shorter than requested degree");
    int top = std::min(maxk + 1, res.length());
    std::vector<TensorResult> spaces;
    for (int k = 0; k <= top; ++k) {
        Module pk = res.terms[k];
        spaces.push_back(tensor_space(m_right_as_op, pk));
    }
    auto tdim = [&](int k) { return k <= top ? spaces[k].dim : 0; };
    // induced differential M (x) P_k -> M (x) P_{k-1}
    auto trank = [&](int k) -> int {
        if (k < 1 || k > top) return 0;
        Mat lifted = kron(Mat::identity(m_right_as_op.dim), res.diffs[k - 1].mat);
        Mat induced = spaces[k - 1].proj * lifted * spaces[k].section;
        return rank(induced);
    };
    std::vector<int> out;
    for (int k = 0; k <= maxk; ++k) out.push_back(tdim(k) - trank(k) - trank(k + 1));
    return out;
}

int tor(const Module& m_right_as_op, const Module& n, int i, int bound) {
    if (i < 0) throw std::invalid_argument("tor: negative degree");
    Resolution res = min_resolution(n, std::max(bound, i));
    if (res.terminated && i > res.length()) return 0;
    return tor_dims(m_right_as_op, res, i)[i];
}

DimValue injective_dim(const Module& m, int bound) { return pd(dual(m), bound); }

DimValue global_dim(AlgebraPtr r, int bound) {
    DimValue best = DimValue::finite(0, bound);
    bool any_unknown = false;
    for (const Module& s : simples(r)) {
        DimValue d = pd(s, bound);
        if (d.kind == DimValue::Infinite) return d;
        if (d.kind == DimValue::Unknown) any_unknown = true;
        else if (d.value > best.value) best = d;
    }
    if (any_unknown) return DimValue::unknown(bound);
    best.bound = bound;
    return best;
}

GorensteinVerdict gorenstein_check(AlgebraPtr r, int bound) {
    GorensteinVerdict out;
    out.left = injective_dim(Module::regular(r), bound);
    out.right = injective_dim(Module::regular(opposite(*r)), bound);
    if (out.left.is_finite() && out.right.is_finite()) out.kind = GorensteinVerdict::Yes;
    else if (out.left.kind == DimValue::Infinite) {
        out.kind = GorensteinVerdict::No;
        out.failing_side = "left";
    } else if (out.right.kind == DimValue::Infinite) {
        out.kind = GorensteinVerdict::No;
        out.failing_side = "right";
    } else {
        out.kind = GorensteinVerdict::Unknown;
    }
    return out;
}

}  // namespace qha

#include "qha/complex.hpp"

#include <stdexcept>

namespace qha {

Module ChainComplex::term(int degree) const {
    if (degree < lo || degree > hi()) return Module::zero(alg);
    return terms[degree - lo];
}

Mat ChainComplex::diff(int degree) const {
    if (degree < lo || degree >= hi()) return Mat(term(degree + 1).dim, term(degree).dim);
    return diffs[degree - lo];
}

void ChainComplex::validate() const {
    if (terms.empty()) return;
    if (diffs.size() + 1 != terms.size()) throw std::runtime_error("complex: differential count mismatch");
    for (size_t k = 0; k < diffs.size(); ++k) {
        Morphism d{terms[k], terms[k + 1], diffs[k]};
        d.validate();
        if (k + 1 < diffs.size() && !(diffs[k + 1] * diffs[k]).is_zero())
            throw std::runtime_error("complex: d o d != 0");
    }
}

ChainComplex ChainComplex::stalk(const Module& m, int degree) {
    ChainComplex x;
    x.alg = m.alg;
    x.lo = degree;
    x.terms.push_back(m);
    return x;
}

Mat ChainMap::mat(int degree) const {
    int hi = lo + static_cast<int>(mats.size()) - 1;
    if (degree < lo || degree > hi) return Mat(target.term(degree).dim, source.term(degree).dim);
    return mats[degree - lo];
}

void ChainMap::validate() const {
    source.validate();
    target.validate();
    int a = std::min(source.lo, target.lo) - 1;
    int b = std::max(source.hi(), target.hi()) + 1;
    for (int i = a; i <= b; ++i) {
        Morphism f{source.term(i), target.term(i), mat(i)};
        f.validate();
        if (i < b) {
            Mat lhs = target.diff(i) * mat(i);
            Mat rhs = mat(i + 1) * source.diff(i);
            if (!(lhs - rhs).is_zero()) throw std::runtime_error("not a chain map");
        }
    }
}

ChainComplex cone(const ChainMap& f) {
    f.validate();
    const ChainComplex& x = f.source;
    const ChainComplex& y = f.target;
    ChainComplex c;
    c.alg = y.alg;
    c.lo = std::min(x.lo - 1, y.lo);
    int hi = std::max(x.hi() - 1, y.hi());
    for (int i = c.lo; i <= hi; ++i) c.terms.push_back(Module::direct_sum({x.term(i + 1), y.term(i)}));
    for (int i = c.lo; i < hi; ++i) {
        int xr = x.term(i + 2).dim, xc = x.term(i + 1).dim;
        int yr = y.term(i + 1).dim, yc = y.term(i).dim;
        Mat d(xr + yr, xc + yc);
        Mat dx = x.diff(i + 1);
        Mat fy = f.mat(i + 1);
        Mat dy = y.diff(i);
        for (int r = 0; r < xr; ++r)
            for (int col = 0; col < xc; ++col) d.at(r, col) = fp::neg(dx.at(r, col));
        for (int r = 0; r < yr; ++r) {
            for (int col = 0; col < xc; ++col) d.at(xr + r, col) = fy.at(r, col);
            for (int col = 0; col < yc; ++col) d.at(xr + r, xc + col) = dy.at(r, col);
        }
        c.diffs.push_back(d);
    }
    c.validate();
    return c;
}

ChainComplex truncate_geq(const ChainComplex& x, int n) {
    if (n <= x.lo) return x;
    ChainComplex out;
    out.alg = x.alg;
    out.lo = n;
    for (int i = n; i <= x.hi(); ++i) out.terms.push_back(x.term(i));
    for (int i = n; i < x.hi(); ++i) out.diffs.push_back(x.diff(i));
    if (out.terms.empty()) {
        out.lo = 0;
        out.terms.push_back(Module::zero(x.alg));
    }
    return out;
}

Module homology(const ChainComplex& x, int n) {
    Module xn = x.term(n);
    if (xn.dim == 0) return Module::zero(x.alg);
    Submodule z = kernel(Morphism{xn, x.term(n + 1), x.diff(n)});
    Mat prev = x.diff(n - 1);
    if (prev.cols == 0 || prev.is_zero()) return z.module;
    auto in_z = solve_mat(z.incl.mat, prev);
    if (!in_z) throw std::runtime_error("internal: boundaries not inside cycles");
    Morphism g{x.term(n - 1), z.module, *in_z};
    return cokernel(g).module;
}

int complex_length(const ChainComplex& x) {
    int n = 0;
    for (const Module& t : x.terms)
        if (t.dim > 0) ++n;
    return n;
}

bool is_acyclic(const ChainComplex& x) {
    for (int i = x.lo; i <= x.hi(); ++i)
        if (homology(x, i).dim != 0) return false;
    return true;
}

ResolvedComplex resolve_complex(const ChainComplex& x, int bound) {
    x.validate();
    int top = x.hi();
    int bottom = x.lo - bound;
    // degree-descending scratch, reversed at the end
    std::vector<Module> pterms;
    std::vector<Mat> pdiffs;  // d_P^i for i in (bottom, top]... stored alongside
    std::vector<Mat> fmats;
    Module p1 = Module::zero(x.alg);  // P^{i+1}
    Module p2 = Module::zero(x.alg);  // P^{i+2}
    Mat f1(0, 0);                     // f^{i+1}: P^{i+1} -> X^{i+1}
    Mat d1(0, 0);                     // d_P^{i+1}: P^{i+1} -> P^{i+2}
    for (int i = top; i >= bottom; --i) {
        Module xi = x.term(i);
        Module x_next = x.term(i + 1);
        Module amb = Module::direct_sum({xi, p1});
        Module cod = Module::direct_sum({x_next, p2});
        // W = {(v, p) in X^i + P^{i+1} : d_X v = f p, d_P p = 0}
        Mat k(x_next.dim + p2.dim, xi.dim + p1.dim);
        Mat dx = x.diff(i);
        for (int r = 0; r < x_next.dim; ++r) {
            for (int c = 0; c < xi.dim; ++c) k.at(r, c) = dx.at(r, c);
            for (int c = 0; c < p1.dim; ++c) k.at(r, xi.dim + c) = fp::neg(f1.at(r, c));
        }
        for (int r = 0; r < p2.dim; ++r)
            for (int c = 0; c < p1.dim; ++c) k.at(x_next.dim + r, xi.dim + c) = d1.at(r, c);
        Submodule w = kernel(Morphism{amb, cod, k});
        Cover cover = projective_cover(w.module);
        Mat composite = w.incl.mat * cover.epi.mat;  // P^i -> X^i + P^{i+1}
        Mat fi(xi.dim, cover.proj_module.dim);
        Mat di(p1.dim, cover.proj_module.dim);
        for (int c = 0; c < cover.proj_module.dim; ++c) {
            for (int r = 0; r < xi.dim; ++r) fi.at(r, c) = composite.at(r, c);
            for (int r = 0; r < p1.dim; ++r) di.at(r, c) = composite.at(xi.dim + r, c);
        }
        pterms.push_back(cover.proj_module);
        fmats.push_back(fi);
        if (i < top) pdiffs.push_back(di);
        p2 = p1;
        d1 = di;
        p1 = cover.proj_module;
        f1 = fi;
    }
    ResolvedComplex out;
    out.proj.alg = x.alg;
    out.proj.lo = bottom;
    for (auto it = pterms.rbegin(); it != pterms.rend(); ++it) out.proj.terms.push_back(*it);
    for (auto it = pdiffs.rbegin(); it != pdiffs.rend(); ++it) out.proj.diffs.push_back(*it);
    out.to_x.source = out.proj;
    out.to_x.target = x;
    out.to_x.lo = bottom;
    for (auto it = fmats.rbegin(); it != fmats.rend(); ++it) out.to_x.mats.push_back(*it);
    out.proj.validate();
    out.to_x.validate();
    return out;
}

FgpVerdict in_fgp(const ChainComplex& x, int bound) {
    FgpVerdict out;
    out.bound = bound;
    int min_h = x.hi() + 1;
    for (int i = x.lo; i <= x.hi(); ++i)
        if (homology(x, i).dim != 0) {
            min_h = i;
            break;
        }
    if (min_h > x.hi()) {
        out.kind = FgpVerdict::Yes;
        out.acyclic = true;
        out.detail = "acyclic complex";
        return out;
    }
    int t = min_h - 1;
    out.threshold = t;
    ResolvedComplex p = resolve_complex(x, x.lo - t + 1);
    Module z = kernel(Morphism{p.proj.term(t), p.proj.term(t + 1), p.proj.diff(t)}).module;
    out.cycle_gpd = gpd(z, bound);
    switch (out.cycle_gpd.kind) {
        case DimValue::Finite:
            out.kind = FgpVerdict::Yes;
            out.detail = "cycle below homology has finite Gorenstein projective dimension";
            break;
        case DimValue::Infinite:
            out.kind = FgpVerdict::No;
            out.detail = "cycle below homology has certified infinite Gorenstein projective dimension";
            break;
        default:
            out.kind = FgpVerdict::Unknown;
            out.detail = "bound exhausted";
    }
    return out;
}

}  // namespace qha

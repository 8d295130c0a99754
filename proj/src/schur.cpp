#include "qha/schur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qha {

namespace {

/// Induced matrix of `act` on the subspace spanned by the columns of u.
Mat restrict_to(const Mat& u, const Mat& act) {
    auto m = solve_mat(u, act * u);
    if (!m) throw std::runtime_error("internal: subspace not closed under action");
    return *m;
}

Mat vectorize(const std::vector<Morphism>& basis) {
    if (basis.empty()) return Mat(0, 0);
    int sz = basis[0].mat.rows * basis[0].mat.cols;
    Mat out(sz, static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
        for (int i = 0; i < sz; ++i) out.at(i, static_cast<int>(c)) = basis[c].mat.data[i];
    return out;
}

void check_counit(const Idempotent& e, const Module& built, const Module& g, const char* functor) {
    Module s = schur_S(e, built);
    if (s.dim != g.dim)
        throw std::runtime_error(std::string("internal: ") + functor + " counit dimension mismatch");
    if (g.dim == 0) return;
    IsoResult iso = is_isomorphic(s, g);
    if (iso.kind == IsoResult::No)
        throw std::runtime_error(std::string("internal: ") + functor + " counit not an isomorphism");
}

}  // namespace

Idempotent make_idempotent(AlgebraPtr r, const std::vector<std::string>& vertices) {
    if (vertices.empty()) throw std::runtime_error("empty idempotent");
    Idempotent e;
    e.alg = r;
    e.vertices = vertices;
    e.elem = r->idempotent_sum(vertices);
    Vec sq = r->mul(e.elem, e.elem);
    if (sq != e.elem) throw std::runtime_error("internal: idempotent sum not idempotent");
    CornerData cd = corner_data(*r, vertices);
    e.corner_alg = cd.alg;
    e.embed = cd.embed;
    return e;
}

Bimodule re_bimodule(const Idempotent& e) {
    const FDAlgebra& r = *e.alg;
    Mat v = column_space_basis(r.right_mult(e.elem));
    Bimodule b;
    b.left_alg = e.alg;
    b.right_alg = e.corner_alg;
    b.dim = v.cols;
    for (int i = 0; i < r.dim; ++i) b.left_action.push_back(restrict_to(v, r.left_mult(r.basis_elem(i))));
    for (int c = 0; c < e.corner_alg->dim; ++c)
        b.right_action.push_back(restrict_to(v, r.right_mult(e.embed.column(c))));
    b.validate();
    return b;
}

Bimodule er_bimodule(const Idempotent& e) {
    const FDAlgebra& r = *e.alg;
    Mat w = column_space_basis(r.left_mult(e.elem));
    Bimodule b;
    b.left_alg = e.corner_alg;
    b.right_alg = e.alg;
    b.dim = w.cols;
    for (int c = 0; c < e.corner_alg->dim; ++c)
        b.left_action.push_back(restrict_to(w, r.left_mult(e.embed.column(c))));
    for (int i = 0; i < r.dim; ++i) b.right_action.push_back(restrict_to(w, r.right_mult(r.basis_elem(i))));
    b.validate();
    return b;
}

Module schur_S(const Idempotent& e, const Module& m) {
    Module out;
    out.alg = e.corner_alg;
    Mat u = column_space_basis(m.act(e.elem));
    out.dim = u.cols;
    for (int c = 0; c < e.corner_alg->dim; ++c) out.action.push_back(restrict_to(u, m.act(e.embed.column(c))));
    return out;
}

Module schur_T(const Idempotent& e, const Module& g) {
    BimoduleTensor bt = tensor(re_bimodule(e), g);
    check_counit(e, bt.module, g, "T_e");
    return bt.module;
}

Module schur_L(const Idempotent& e, const Module& g) {
    Bimodule er = er_bimodule(e);
    Module er_left = er.as_left_module();
    std::vector<Morphism> homs = hom_space(er_left, g);
    Module out;
    out.alg = e.alg;
    out.dim = static_cast<int>(homs.size());
    Mat hom_vec = vectorize(homs);
    for (int b = 0; b < e.alg->dim; ++b) {
        Mat act(out.dim, out.dim);
        for (int c = 0; c < out.dim; ++c) {
            Mat moved = homs[c].mat * er.right_action[b];
            Vec vv(moved.data.begin(), moved.data.end());
            auto coords = solve(hom_vec, vv);
            if (!coords) throw std::runtime_error("internal: translated hom escapes hom space");
            for (int rr = 0; rr < out.dim; ++rr) act.at(rr, c) = (*coords)[rr];
        }
        out.action.push_back(act);
    }
    out.validate();
    check_counit(e, out, g, "L_e");
    return out;
}

Module QuotientInflation::inflate(AlgebraPtr r, const Module& n) const {
    Module out;
    out.alg = r;
    out.dim = n.dim;
    for (int b = 0; b < r->dim; ++b) out.action.push_back(n.act(proj.column(b)));
    out.validate();
    return out;
}

QuotientInflation quotient_inflation(const Idempotent& e) {
    const FDAlgebra& r = *e.alg;
    std::vector<Vec> gens;
    for (int i = 0; i < r.dim; ++i) {
        Vec bi_e = r.mul(r.basis_elem(i), e.elem);
        for (int j = 0; j < r.dim; ++j) gens.push_back(r.mul(bi_e, r.basis_elem(j)));
    }
    Mat ideal = Mat::from_columns(gens, r.dim);
    CokernelProjection ck = cokernel_projection(ideal);

    QuotientInflation out;
    out.proj = ck.projection;
    out.section = ck.section;
    auto q = std::make_shared<FDAlgebra>();
    q->dim = ck.quotient_dim;
    q->modulus = fp::modulus();
    for (int c = 0; c < ck.quotient_dim; ++c) {
        int coord = -1;
        for (int rr = 0; rr < r.dim; ++rr)
            if (ck.section.at(rr, c) == 1) coord = rr;
        q->basis_names.push_back(coord >= 0 ? r.basis_names[coord] : "q" + std::to_string(c));
    }
    q->product.assign(q->dim, std::vector<Vec>(q->dim, Vec(q->dim, 0)));
    for (int i = 0; i < q->dim; ++i)
        for (int j = 0; j < q->dim; ++j)
            q->product[i][j] = mat_vec(ck.projection, r.mul(ck.section.column(i), ck.section.column(j)));
    q->unit = mat_vec(ck.projection, r.unit);
    for (const auto& idem : r.idems) {
        Vec img = mat_vec(ck.projection, idem.elem);
        if (img == Vec(q->dim, 0)) continue;
        q->idems.push_back({idem.vertex, img});
    }
    std::vector<Vec> rad;
    for (const Vec& rv : r.radical) {
        Vec img = mat_vec(ck.projection, rv);
        if (img != Vec(q->dim, 0)) rad.push_back(img);
    }
    if (!rad.empty()) {
        Mat m = Mat::from_columns(rad, q->dim).transpose();
        q->radical = row_space_basis(m);
    }
    if (q->dim > 0) q->validate();
    out.quotient = q;
    return out;
}

std::string to_string(TriVerdict v) {
    switch (v) {
        case TriVerdict::Holds: return "holds";
        case TriVerdict::Fails: return "fails";
        default: return "inconclusive";
    }
}

TriVerdict combine(std::initializer_list<TriVerdict> vs) {
    bool unknown = false;
    for (TriVerdict v : vs) {
        if (v == TriVerdict::Fails) return TriVerdict::Fails;
        if (v == TriVerdict::Unknown) unknown = true;
    }
    return unknown ? TriVerdict::Unknown : TriVerdict::Holds;
}

namespace {

TriVerdict aggregate(const std::vector<CheckEntry>& entries) {
    bool unknown = false;
    for (const auto& en : entries) {
        if (en.verdict == "no" || en.verdict == "infinite") return TriVerdict::Fails;
        if (en.verdict == "unknown") unknown = true;
    }
    return unknown ? TriVerdict::Unknown : TriVerdict::Holds;
}

}  // namespace

CheckResult tor_vanishing(const Module& m_right_as_op, const std::vector<Module>& ts, int bound) {
    CheckResult out;
    out.test_set_size = static_cast<int>(ts.size());
    for (size_t n = 0; n < ts.size(); ++n) {
        const Module& g = ts[n];
        Resolution res = min_resolution(g, bound);
        int window = res.terminated ? res.length() : res.length() - 1;
        std::vector<int> tors = tor_dims(m_right_as_op, res, window);
        int first_nonzero = 0;
        for (int i = 1; i <= window; ++i)
            if (tors[i] != 0) {
                first_nonzero = i;
                break;
            }
        CheckEntry entry;
        entry.label = "G" + std::to_string(n) + " (dim " + std::to_string(g.dim) + ")";
        bool tail_covered = res.terminated || (res.periodicity && res.periodicity->j <= window);
        if (first_nonzero == 0 && tail_covered) {
            entry.verdict = "yes";
            entry.detail = "Tor vanishes in degrees 1.." + std::to_string(window) + " with covered tail";
        } else if (res.terminated) {
            entry.verdict = "yes";
            entry.detail = "finite resolution; Tor vanishes beyond degree " + std::to_string(res.length());
        } else if (res.periodicity && res.periodicity->j <= window) {
            int i0 = res.periodicity->i, j0 = res.periodicity->j;
            int tail_witness = 0;
            for (int k = i0 + 1; k <= j0; ++k)
                if (tors[k] != 0) tail_witness = k;
            if (tail_witness == 0) {
                entry.verdict = "yes";
                entry.detail = "periodic tail vanishes from degree " + std::to_string(i0 + 1);
            } else {
                entry.verdict = "no";
                entry.detail = "nonzero Tor recurs on the periodic tail at degree " + std::to_string(tail_witness);
            }
        } else {
            entry.verdict = "unknown";
            entry.detail = "bound exhausted";
        }
        out.entries.push_back(entry);
    }
    out.verdict = aggregate(out.entries);
    return out;
}

CheckResult tor_condition(const Idempotent& e, int bound) {
    Module re_right = re_bimodule(e).as_right_module();
    return tor_vanishing(re_right, gproj_test_set(e.corner_alg, bound), bound);
}

namespace {

CheckResult dim_check_over_set(const std::vector<Module>& ts,
                               const std::function<DimValue(const Module&)>& f,
                               const char* what) {
    CheckResult out;
    out.test_set_size = static_cast<int>(ts.size());
    for (size_t n = 0; n < ts.size(); ++n) {
        CheckEntry entry;
        entry.label = std::string(what) + std::to_string(n) + " (dim " + std::to_string(ts[n].dim) + ")";
        DimValue d = f(ts[n]);
        entry.verdict = d.str();
        out.entries.push_back(entry);
    }
    out.verdict = aggregate(out.entries);
    return out;
}

}  // namespace

CheckResult check_C1(const Idempotent& e, int bound) {
    std::vector<Module> ts = gproj_test_set(e.alg, bound);
    return dim_check_over_set(
        ts, [&](const Module& f) { return gpd(schur_S(e, f), bound); }, "F");
}

CheckResult check_C2(const Idempotent& e, int bound) {
    std::vector<Module> ts = gproj_test_set(e.corner_alg, bound);
    return dim_check_over_set(
        ts, [&](const Module& g) { return gpd(schur_T(e, g), bound); }, "G");
}

CheckResult check_C3_gorenstein(const Idempotent& e, int bound) {
    QuotientInflation qi = quotient_inflation(e);
    if (qi.quotient->dim == 0) {
        CheckResult out;
        out.verdict = TriVerdict::Holds;
        out.detail = "quotient algebra is zero";
        return out;
    }
    std::vector<Module> ts = simples(qi.quotient);
    std::vector<Module> inflated;
    for (const Module& s : ts) inflated.push_back(qi.inflate(e.alg, s));
    return dim_check_over_set(
        inflated, [&](const Module& m) { return gpd(m, bound); }, "S");
}

CheckResult check_C3_strict(const Idempotent& e, int bound) {
    CheckResult out;
    QuotientInflation qi = quotient_inflation(e);
    std::vector<Module> inflated;
    if (qi.quotient->dim > 0)
        for (const Module& s : simples(qi.quotient)) inflated.push_back(qi.inflate(e.alg, s));
    out = dim_check_over_set(
        inflated, [&](const Module& m) { return pd(m, bound); }, "S");
    // pd_{eRe} of eR as a left corner module
    Module er_left = er_bimodule(e).as_left_module();
    DimValue d = pd(er_left, bound);
    CheckEntry entry;
    entry.label = "pd_{eRe} eR";
    entry.verdict = d.str();
    out.entries.push_back(entry);
    out.verdict = aggregate(out.entries);
    return out;
}

SchurReport schur_report(const Idempotent& e, int bound) {
    SchurReport rep;
    rep.vertices = e.vertices;
    rep.bound = bound;
    rep.tor = tor_condition(e, bound);
    rep.c1 = check_C1(e, bound);
    rep.c2 = check_C2(e, bound);
    rep.c3 = check_C3_gorenstein(e, bound);
    rep.c3_strict = check_C3_strict(e, bound);
    rep.theorem33 = combine({rep.tor.verdict, rep.c1.verdict, rep.c2.verdict, rep.c3.verdict});
    rep.corollary34 = combine({rep.tor.verdict, rep.c1.verdict, rep.c2.verdict, rep.c3_strict.verdict});
    return rep;
}

}  // namespace qha

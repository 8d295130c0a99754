#include "qha/trimat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qha {

namespace {

Mat restrict_to(const Mat& u, const Mat& act) {
    auto m = solve_mat(u, act * u);
    if (!m) throw std::runtime_error("internal: subspace not closed under action");
    return *m;
}

Vec pad(const Vec& v, int offset, int total) {
    Vec out(total, 0);
    for (size_t i = 0; i < v.size(); ++i) out[offset + static_cast<int>(i)] = v[i];
    return out;
}

}  // namespace

TriMatAlgebra build_trimat(AlgebraPtr a, AlgebraPtr b, const Bimodule& m) {
    if (!m.left_alg->same_tables(*a) || !m.right_alg->same_tables(*b))
        throw std::runtime_error("bimodule invalid: wrong algebras");
    m.validate();
    int da = a->dim, dm = m.dim, db = b->dim;
    int dim = da + dm + db;

    std::set<std::string> a_vertices;
    for (const auto& id : a->idems) a_vertices.insert(id.vertex);
    bool clash = false;
    for (const auto& id : b->idems) clash |= a_vertices.count(id.vertex) > 0;
    std::string pa = clash ? "A." : "";
    std::string pb = clash ? "B." : "";

    auto t = std::make_shared<FDAlgebra>();
    t->dim = dim;
    t->modulus = fp::modulus();
    for (const auto& n : a->basis_names) t->basis_names.push_back(pa + n);
    for (int k = 0; k < dm; ++k) t->basis_names.push_back("m" + std::to_string(k));
    for (const auto& n : b->basis_names) t->basis_names.push_back(pb + n);

    t->product.assign(dim, std::vector<Vec>(dim, Vec(dim, 0)));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) t->product[i][j] = pad(a->product[i][j], 0, dim);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j)
            t->product[da + dm + i][da + dm + j] = pad(b->product[i][j], da + dm, dim);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < dm; ++j)
            t->product[i][da + j] = pad(m.left_action[i].column(j), da, dim);
    for (int j = 0; j < dm; ++j)
        for (int i = 0; i < db; ++i)
            t->product[da + j][da + dm + i] = pad(m.right_action[i].column(j), da, dim);

    t->unit = pad(a->unit, 0, dim);
    {
        Vec ub = pad(b->unit, da + dm, dim);
        for (int i = 0; i < dim; ++i) t->unit[i] = fp::add(t->unit[i], ub[i]);
    }
    for (const auto& id : a->idems) t->idems.push_back({pa + id.vertex, pad(id.elem, 0, dim)});
    for (const auto& id : b->idems) t->idems.push_back({pb + id.vertex, pad(id.elem, da + dm, dim)});
    for (const Vec& rv : a->radical) t->radical.push_back(pad(rv, 0, dim));
    for (int k = 0; k < dm; ++k) {
        Vec v(dim, 0);
        v[da + k] = 1;
        t->radical.push_back(v);
    }
    for (const Vec& rv : b->radical) t->radical.push_back(pad(rv, da + dm, dim));
    t->validate();

    TriMatAlgebra tm;
    tm.a = a;
    tm.b = b;
    tm.m = m;
    tm.t = t;
    std::vector<std::string> va, vb;
    for (const auto& id : a->idems) va.push_back(pa + id.vertex);
    for (const auto& id : b->idems) vb.push_back(pb + id.vertex);
    tm.e_a = make_idempotent(t, va);
    tm.e_b = make_idempotent(t, vb);
    if (!tm.e_a.corner_alg->same_tables(*a)) throw std::runtime_error("internal: e_A corner differs from A");
    if (!tm.e_b.corner_alg->same_tables(*b)) throw std::runtime_error("internal: e_B corner differs from B");
    return tm;
}

TriMatAlgebra split_trimat(AlgebraPtr r, const std::vector<std::string>& a_vertices) {
    std::set<std::string> chosen(a_vertices.begin(), a_vertices.end());
    std::vector<std::string> b_vertices;
    for (const auto& id : r->idems)
        if (!chosen.count(id.vertex)) b_vertices.push_back(id.vertex);
    if (a_vertices.empty() || b_vertices.empty())
        throw std::runtime_error("split: both parts must be nonempty");
    for (const auto& v : a_vertices) r->vertex_pos(v);  // existence check

    Vec ea = r->idempotent_sum(a_vertices);
    Vec eb = r->idempotent_sum(b_vertices);
    if (!(r->left_mult(eb) * r->right_mult(ea)).is_zero())
        throw std::runtime_error("not triangular: e_B R e_A != 0");

    CornerData ca = corner_data(*r, a_vertices);
    CornerData cb = corner_data(*r, b_vertices);
    Mat u = column_space_basis(r->left_mult(ea) * r->right_mult(eb));
    Bimodule m;
    m.left_alg = ca.alg;
    m.right_alg = cb.alg;
    m.dim = u.cols;
    for (int c = 0; c < ca.alg->dim; ++c)
        m.left_action.push_back(restrict_to(u, r->left_mult(ca.embed.column(c))));
    for (int c = 0; c < cb.alg->dim; ++c)
        m.right_action.push_back(restrict_to(u, r->right_mult(cb.embed.column(c))));
    m.validate();
    return build_trimat(ca.alg, cb.alg, m);
}

TripleModule make_triple(const TriMatAlgebra& tm, const Module& x, const Module& y, const Mat& phi) {
    TripleModule t;
    t.x = x;
    t.y = y;
    t.my = tensor(tm.m, y);
    if (phi.rows != x.dim || phi.cols != t.my.module.dim)
        throw std::runtime_error("triple: phi has wrong shape");
    Morphism f{t.my.module, x, phi};
    f.validate();  // phi is an A-morphism
    t.phi = phi;
    return t;
}

Module triple_to_module(const TriMatAlgebra& tm, const TripleModule& t) {
    int da = tm.dim_a(), dm = tm.dim_m(), db = tm.dim_b();
    int dx = t.x.dim, dy = t.y.dim;
    Module out;
    out.alg = tm.t;
    out.dim = dx + dy;
    for (int i = 0; i < da + dm + db; ++i) {
        Mat act(out.dim, out.dim);
        if (i < da) {
            for (int r = 0; r < dx; ++r)
                for (int c = 0; c < dx; ++c) act.at(r, c) = t.x.action[i].at(r, c);
        } else if (i < da + dm) {
            int j = i - da;
            for (int l = 0; l < dy; ++l) {
                // class of m_j (x) y_l, then phi
                Vec ten = t.my.space.proj.column(j * dy + l);
                Vec img = mat_vec(t.phi, ten);
                for (int r = 0; r < dx; ++r) act.at(r, dx + l) = img[r];
            }
        } else {
            int j = i - da - dm;
            for (int r = 0; r < dy; ++r)
                for (int c = 0; c < dy; ++c) act.at(dx + r, dx + c) = t.y.action[j].at(r, c);
        }
        out.action.push_back(act);
    }
    out.validate();
    return out;
}

TripleModule module_to_triple(const TriMatAlgebra& tm, const Module& n) {
    int da = tm.dim_a(), dm = tm.dim_m();
    Mat u = column_space_basis(n.act(tm.e_a.elem));
    Module x;
    x.alg = tm.a;
    x.dim = u.cols;
    for (int i = 0; i < da; ++i) x.action.push_back(restrict_to(u, n.act(tm.t->basis_elem(i))));
    x.validate();
    Mat v = column_space_basis(n.act(tm.e_b.elem));
    Module y;
    y.alg = tm.b;
    y.dim = v.cols;
    for (int i = 0; i < tm.dim_b(); ++i)
        y.action.push_back(restrict_to(v, n.act(tm.t->basis_elem(da + dm + i))));
    y.validate();

    BimoduleTensor my = tensor(tm.m, y);
    Mat phi(x.dim, my.space.dim);
    for (int q = 0; q < my.space.dim; ++q) {
        Vec amb(n.dim, 0);
        Vec sec = my.space.section.column(q);  // kron coords, m-major
        for (int j = 0; j < dm; ++j)
            for (int l = 0; l < y.dim; ++l) {
                i64 cjl = sec[j * y.dim + l];
                if (cjl == 0) continue;
                Vec moved = mat_vec(n.act(tm.t->basis_elem(da + j)), v.column(l));
                for (int r = 0; r < n.dim; ++r) amb[r] = fp::add(amb[r], fp::mul(cjl, moved[r]));
            }
        auto coords = solve(u, amb);
        if (!coords) throw std::runtime_error("internal: M-action escapes the X part");
        for (int r = 0; r < x.dim; ++r) phi.at(r, q) = (*coords)[r];
    }
    return make_triple(tm, x, y, phi);
}

namespace {

bool exact_sequence(int dim_s, int dim_m, int dim_q, const Mat& f, const Mat& g) {
    if (!(g * f).is_zero()) return false;
    int rf = rank(f), rg = rank(g);
    return rf == dim_s && rg == dim_q && rf + rg == dim_m;
}

}  // namespace

SesVerdict ses_check(const TriMatAlgebra& tm, const TripleMorphism& f, const TripleMorphism& g) {
    SesVerdict out;
    out.x_exact = exact_sequence(f.source.x.dim, f.target.x.dim, g.target.x.dim, f.fx, g.fx);
    out.y_exact = exact_sequence(f.source.y.dim, f.target.y.dim, g.target.y.dim, f.fy, g.fy);
    Module s = triple_to_module(tm, f.source);
    Module mid = triple_to_module(tm, f.target);
    Module q = triple_to_module(tm, g.target);
    auto block = [](const Mat& fx, const Mat& fy) {
        Mat out2(fx.rows + fy.rows, fx.cols + fy.cols);
        for (int r = 0; r < fx.rows; ++r)
            for (int c = 0; c < fx.cols; ++c) out2.at(r, c) = fx.at(r, c);
        for (int r = 0; r < fy.rows; ++r)
            for (int c = 0; c < fy.cols; ++c) out2.at(fx.rows + r, fx.cols + c) = fy.at(r, c);
        return out2;
    };
    Mat ft = block(f.fx, f.fy);
    Mat gt = block(g.fx, g.fy);
    Morphism mf{s, mid, ft};
    mf.validate();
    Morphism mg{mid, q, gt};
    mg.validate();
    out.t_exact = exact_sequence(s.dim, mid.dim, q.dim, ft, gt);
    return out;
}

CheckResult compatibility_check(const TriMatAlgebra& tm, int bound) {
    Module m_right = tm.m.as_right_module();
    std::vector<Module> ts_b = gproj_test_set(tm.b, bound);
    CheckResult part1 = tor_vanishing(m_right, ts_b, bound);

    Module m_left = tm.m.as_left_module();
    std::vector<Module> ts_a = gproj_test_set(tm.a, bound);
    CheckResult out = part1;
    out.test_set_size = static_cast<int>(ts_b.size() + ts_a.size());
    for (size_t n = 0; n < ts_a.size(); ++n) {
        CheckEntry entry;
        entry.label = "Ext^1(G" + std::to_string(n) + ", M)";
        int d = ext(ts_a[n], m_left, 1, bound);
        entry.verdict = d == 0 ? "yes" : "no";
        if (d != 0) entry.detail = "Ext^1 has dimension " + std::to_string(d);
        out.entries.push_back(entry);
    }
    bool unknown = false, fails = false;
    for (const auto& en : out.entries) {
        if (en.verdict == "no") fails = true;
        if (en.verdict == "unknown") unknown = true;
    }
    out.verdict = fails ? TriVerdict::Fails : unknown ? TriVerdict::Unknown : TriVerdict::Holds;
    return out;
}

Lemma41Result lemma41_check(const TriMatAlgebra& tm, const TripleModule& t, int bound) {
    Lemma41Result out;
    out.direct = gproj_check(triple_to_module(tm, t), bound);
    out.y_verdict = gproj_check(t.y, bound);
    out.phi_injective = rank(t.phi) == t.my.module.dim;
    Module coker = cokernel(Morphism{t.my.module, t.x, t.phi}).module;
    out.coker_verdict = gproj_check(coker, bound);
    if (out.y_verdict.kind == GprojVerdict::No || !out.phi_injective ||
        out.coker_verdict.kind == GprojVerdict::No) {
        out.criterion = TriVerdict::Fails;
    } else if (out.y_verdict.kind == GprojVerdict::Yes && out.coker_verdict.kind == GprojVerdict::Yes) {
        out.criterion = TriVerdict::Holds;
    }
    out.both_certified =
        out.direct.kind != GprojVerdict::Unknown && out.criterion != TriVerdict::Unknown;
    out.agree = out.both_certified &&
                ((out.direct.kind == GprojVerdict::Yes) == (out.criterion == TriVerdict::Holds));
    return out;
}

namespace {

/// Quotient of a random indecomposable projective by a random cyclic
/// submodule, retried until the dimension drops to at most 4.
Module random_small_module(AlgebraPtr a, std::mt19937_64& rng) {
    std::vector<std::string> verts;
    for (const auto& id : a->idems) verts.push_back(id.vertex);
    i64 p = fp::modulus();
    for (int attempt = 0; attempt < 10; ++attempt) {
        Module proj = projective(a, verts[rng() % verts.size()]);
        Vec gen(proj.dim, 0);
        for (i64& c : gen) c = static_cast<i64>(rng() % static_cast<unsigned long>(p));
        Submodule sub = span_submodule(proj, {gen});
        Module x = proj;
        if (sub.module.dim > 0 && sub.module.dim < proj.dim)
            x = cokernel(Morphism{sub.module, proj, sub.incl.mat}).module;
        if (x.dim <= 4) return x;
    }
    return simple_at(a, verts[rng() % verts.size()]);
}

}  // namespace

TripleModule random_triple(const TriMatAlgebra& tm, std::mt19937_64& rng) {
    Module x = random_small_module(tm.a, rng);
    Module y = random_small_module(tm.b, rng);
    BimoduleTensor my = tensor(tm.m, y);
    std::vector<Morphism> homs = hom_space(my.module, x);
    Mat phi(x.dim, my.module.dim);
    i64 p = fp::modulus();
    for (const Morphism& h : homs)
        phi = phi + scale(h.mat, static_cast<i64>(rng() % static_cast<unsigned long>(p)));
    return make_triple(tm, x, y, phi);
}

Cor42Result cor42_check(const TriMatAlgebra& tm, const Module& x, int bound) {
    Cor42Result out;
    Module zero_y = Module::zero(tm.b);
    TripleModule t = make_triple(tm, x, zero_y, Mat(x.dim, 0));
    out.gpd_t = gpd(triple_to_module(tm, t), bound);
    out.gpd_a = gpd(x, bound);
    out.both_certified =
        out.gpd_t.kind != DimValue::Unknown && out.gpd_a.kind != DimValue::Unknown;
    out.equal = out.both_certified && out.gpd_t.kind == out.gpd_a.kind &&
                (out.gpd_t.kind != DimValue::Finite || out.gpd_t.value == out.gpd_a.value);
    return out;
}

namespace {

TriVerdict of_gorenstein(const GorensteinVerdict& g) {
    switch (g.kind) {
        case GorensteinVerdict::Yes: return TriVerdict::Holds;
        case GorensteinVerdict::No: return TriVerdict::Fails;
        default: return TriVerdict::Unknown;
    }
}

TriVerdict of_dim(const DimValue& d) {
    switch (d.kind) {
        case DimValue::Finite: return TriVerdict::Holds;
        case DimValue::Infinite: return TriVerdict::Fails;
        default: return TriVerdict::Unknown;
    }
}

std::string gor_str(const GorensteinVerdict& g) {
    switch (g.kind) {
        case GorensteinVerdict::Yes: return "yes";
        case GorensteinVerdict::No: return "no";
        default: return "unknown";
    }
}

}  // namespace

TheoremReport theorem44_check(const TriMatAlgebra& tm, int bound) {
    TheoremReport rep;
    rep.compatibility = compatibility_check(tm, bound);
    GorensteinVerdict gb = gorenstein_check(tm.b, bound);
    rep.gorenstein = gor_str(gb);
    DimValue gd = global_dim(tm.b, bound);
    rep.gldim = gd.str();
    DimValue pm = pd(tm.m.as_left_module(), bound);
    rep.pd_m = pm.str();
    std::vector<Module> ts = gproj_test_set(tm.b, bound);
    rep.gpd_tensor.test_set_size = static_cast<int>(ts.size());
    for (size_t n = 0; n < ts.size(); ++n) {
        CheckEntry entry;
        entry.label = "Gpd_A M(x)G" + std::to_string(n);
        entry.verdict = gpd(tensor(tm.m, ts[n]).module, bound).str();
        rep.gpd_tensor.entries.push_back(entry);
    }
    {
        bool fails = false, unknown = false;
        for (const auto& en : rep.gpd_tensor.entries) {
            if (en.verdict == "infinite") fails = true;
            if (en.verdict == "unknown") unknown = true;
        }
        rep.gpd_tensor.verdict =
            fails ? TriVerdict::Fails : unknown ? TriVerdict::Unknown : TriVerdict::Holds;
    }
    rep.defect_case = combine({rep.compatibility.verdict, of_gorenstein(gb), rep.gpd_tensor.verdict});
    rep.diagram_case =
        combine({rep.compatibility.verdict, of_dim(gd), of_dim(pm), rep.gpd_tensor.verdict});
    return rep;
}

TheoremReport theorem46_check(const TriMatAlgebra& tm, int bound) {
    TheoremReport rep;
    rep.compatibility = compatibility_check(tm, bound);
    GorensteinVerdict ga = gorenstein_check(tm.a, bound);
    rep.gorenstein = gor_str(ga);
    DimValue gd = global_dim(tm.a, bound);
    rep.gldim = gd.str();
    rep.defect_case = combine({rep.compatibility.verdict, of_gorenstein(ga)});
    rep.diagram_case = combine({rep.compatibility.verdict, of_dim(gd)});
    return rep;
}

}  // namespace qha

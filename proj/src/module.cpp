#include "qha/module.hpp"

#include <stdexcept>

namespace qha {

namespace {

void require_same_algebra(const Module& m, const Module& n) {
    if (!m.alg || !n.alg || !m.alg->same_tables(*n.alg)) throw std::runtime_error("algebra mismatch");
}

}  // namespace

Mat Module::act(const Vec& elem) const {
    Mat out(dim, dim);
    for (int i = 0; i < alg->dim; ++i) {
        i64 c = fp::normalize(elem[i]);
        if (c == 0) continue;
        out = out + scale(action[i], c);
    }
    return out;
}

void Module::validate() const {
    if (static_cast<int>(action.size()) != alg->dim) throw std::runtime_error("module: action table size mismatch");
    for (const Mat& a : action)
        if (a.rows != dim || a.cols != dim) throw std::runtime_error("module: action matrix shape mismatch");
    if (!(act(alg->unit) == Mat::identity(dim))) throw std::runtime_error("module: unit does not act as identity");
    for (int i = 0; i < alg->dim; ++i)
        for (int j = 0; j < alg->dim; ++j)
            if (!(action[i] * action[j] == act(alg->product[i][j])))
                throw std::runtime_error("module: action does not respect the multiplication table");
}

Module Module::zero(AlgebraPtr a) {
    Module m;
    m.alg = std::move(a);
    m.dim = 0;
    m.action.assign(m.alg->dim, Mat(0, 0));
    return m;
}

Module Module::regular(AlgebraPtr a) {
    Module m;
    m.alg = a;
    m.dim = a->dim;
    for (int i = 0; i < a->dim; ++i) m.action.push_back(a->left_mult(a->basis_elem(i)));
    return m;
}

Module Module::direct_sum(const std::vector<Module>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
    Module out;
    out.alg = parts[0].alg;
    for (const Module& p : parts) {
        require_same_algebra(parts[0], p);
        out.dim += p.dim;
    }
    for (int b = 0; b < out.alg->dim; ++b) {
        Mat blk(out.dim, out.dim);
        int off = 0;
        for (const Module& p : parts) {
            for (int r = 0; r < p.dim; ++r)
                for (int c = 0; c < p.dim; ++c) blk.at(off + r, off + c) = p.action[b].at(r, c);
            off += p.dim;
        }
        out.action.push_back(std::move(blk));
    }
    return out;
}

void Morphism::validate() const {
    require_same_algebra(source, target);
    if (mat.rows != target.dim || mat.cols != source.dim) throw std::runtime_error("morphism shape mismatch");
    for (int b = 0; b < source.alg->dim; ++b)
        if (!(mat * source.action[b] == target.action[b] * mat))
            throw std::runtime_error("morphism does not intertwine the actions");
}

Morphism identity_morphism(const Module& m) { return Morphism{m, m, Mat::identity(m.dim)}; }

Morphism zero_morphism(const Module& src, const Module& dst) { return Morphism{src, dst, Mat(dst.dim, src.dim)}; }

Morphism compose(const Morphism& g, const Morphism& f) {
    if (g.source.dim != f.target.dim) throw std::runtime_error("composition shape mismatch");
    return Morphism{f.source, g.target, g.mat * f.mat};
}

Module Bimodule::as_left_module() const {
    Module m;
    m.alg = left_alg;
    m.dim = dim;
    m.action = left_action;
    return m;
}

Module Bimodule::as_right_module() const {
    Module m;
    m.alg = opposite(*right_alg);
    m.dim = dim;
    m.action = right_action;
    return m;
}

void Bimodule::validate() const {
    as_left_module().validate();
    as_right_module().validate();
    for (const Mat& l : left_action)
        for (const Mat& r : right_action)
            if (!(l * r == r * l)) throw std::runtime_error("bimodule invalid: actions do not commute");
}

std::vector<Morphism> hom_space(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    int unknowns = n.dim * m.dim;  // F(r, c) at index r*m.dim + c
    if (unknowns == 0) return {};
    int nb = m.alg->dim;
    Mat sys(nb * unknowns, unknowns);
    int row = 0;
    for (int b = 0; b < nb; ++b) {
        const Mat& A = m.action[b];
        const Mat& B = n.action[b];
        for (int i = 0; i < n.dim; ++i)
            for (int j = 0; j < m.dim; ++j) {
                // (F*A - B*F)(i, j) = 0
                for (int c = 0; c < m.dim; ++c)
                    sys.at(row, i * m.dim + c) = fp::add(sys.at(row, i * m.dim + c), A.at(c, j));
                for (int r = 0; r < n.dim; ++r)
                    sys.at(row, r * m.dim + j) = fp::sub(sys.at(row, r * m.dim + j), B.at(i, r));
                ++row;
            }
    }
    std::vector<Morphism> basis;
    for (const Vec& v : kernel_basis(sys)) {
        Mat f(n.dim, m.dim);
        for (int r = 0; r < n.dim; ++r)
            for (int c = 0; c < m.dim; ++c) f.at(r, c) = v[r * m.dim + c];
        basis.push_back(Morphism{m, n, std::move(f)});
    }
    return basis;
}

namespace {

/// Induced action on a subspace given by full-column-rank U closed under the
/// ambient action.
Submodule submodule_from_basis(const Module& ambient, const Mat& u) {
    Submodule out;
    out.module.alg = ambient.alg;
    out.module.dim = u.cols;
    for (int b = 0; b < ambient.alg->dim; ++b) {
        auto x = solve_mat(u, ambient.action[b] * u);
        if (!x) throw std::runtime_error("internal: subspace not closed under the action");
        out.module.action.push_back(std::move(*x));
    }
    out.incl = Morphism{out.module, ambient, u};
    return out;
}

}  // namespace

Submodule kernel(const Morphism& f) {
    Mat u = Mat::from_columns(kernel_basis(f.mat), f.source.dim);
    return submodule_from_basis(f.source, u);
}

Submodule image(const Morphism& f) {
    Mat u = column_space_basis(f.mat);
    return submodule_from_basis(f.target, u);
}

Quotient cokernel(const Morphism& f) {
    CokernelProjection cp = cokernel_projection(f.mat);
    Quotient out;
    out.module.alg = f.target.alg;
    out.module.dim = cp.quotient_dim;
    for (int b = 0; b < f.target.alg->dim; ++b)
        out.module.action.push_back(cp.projection * f.target.action[b] * cp.section);
    out.proj = Morphism{f.target, out.module, cp.projection};
    return out;
}

Submodule span_submodule(const Module& m, const std::vector<Vec>& gens) {
    std::vector<Vec> current = gens;
    Mat span = column_space_basis(Mat::from_columns(current, m.dim));
    for (;;) {
        std::vector<Vec> cols;
        for (int c = 0; c < span.cols; ++c) cols.push_back(span.column(c));
        int before = span.cols;
        for (int b = 0; b < m.alg->dim; ++b)
            for (int c = 0; c < before; ++c) cols.push_back(mat_vec(m.action[b], span.column(c)));
        Mat next = column_space_basis(Mat::from_columns(cols, m.dim));
        if (next.cols == before) return submodule_from_basis(m, next);
        span = next;
    }
}

Submodule radical_of(const Module& m) {
    std::vector<Vec> gens;
    for (const Vec& r : m.alg->radical) {
        Mat a = m.act(r);
        for (int c = 0; c < m.dim; ++c) gens.push_back(a.column(c));
    }
    if (gens.empty()) gens.push_back(Vec(m.dim, 0));
    return span_submodule(m, gens);
}

Module projective(AlgebraPtr r, const std::string& vertex) {
    int p = r->vertex_pos(vertex);
    if (p < 0) throw std::runtime_error("unknown vertex: " + vertex);
    Module reg = Module::regular(r);
    Mat u = column_space_basis(r->right_mult(r->idems[p].elem));
    return submodule_from_basis(reg, u).module;
}

namespace {

Quotient top_of(const Module& m) { return cokernel(radical_of(m).incl); }

}  // namespace

std::vector<Module> simples(AlgebraPtr r) {
    std::vector<Module> out;
    for (const auto& idem : r->idems) out.push_back(simple_at(r, idem.vertex));
    return out;
}

Module simple_at(AlgebraPtr r, const std::string& vertex) {
    int p = r->vertex_pos(vertex);
    if (p < 0) throw std::runtime_error("unknown vertex: " + vertex);
    Quotient top = top_of(Module::regular(r));
    Mat u = column_space_basis(top.module.act(r->idems[p].elem));
    return submodule_from_basis(top.module, u).module;
}

Cover projective_cover(const Module& m) {
    Cover out;
    if (m.dim == 0) {
        out.proj_module = Module::zero(m.alg);
        out.epi = Morphism{out.proj_module, m, Mat(0, 0)};
        return out;
    }
    Quotient top = top_of(m);
    std::vector<Module> summands;
    std::vector<Vec> generators;  // lifted generator in m per summand
    for (const auto& idem : m.alg->idems) {
        Mat tv = column_space_basis(top.module.act(idem.elem));
        if (tv.cols == 0) continue;
        out.multiplicities.push_back({idem.vertex, tv.cols});
        for (int c = 0; c < tv.cols; ++c) {
            auto lift = solve(top.proj.mat, tv.column(c));
            if (!lift) throw std::runtime_error("internal: top projection not surjective");
            generators.push_back(mat_vec(m.act(idem.elem), *lift));
            summands.push_back(projective(m.alg, idem.vertex));
        }
    }
    if (summands.empty()) {
        // m is radical-equal to itself; only possible for m = 0 over a unital algebra
        out.proj_module = Module::zero(m.alg);
        out.epi = Morphism{out.proj_module, m, Mat(m.dim, 0)};
        return out;
    }
    out.proj_module = Module::direct_sum(summands);
    // basis column c of P(v) corresponds to an algebra element x = x e_v and
    // maps to x . gen under the cover
    Mat epi(m.dim, out.proj_module.dim);
    int off = 0;
    int g = 0;
    for (const auto& idem : m.alg->idems) {
        Mat tv = column_space_basis(top.module.act(idem.elem));
        if (tv.cols == 0) continue;
        Mat u = column_space_basis(m.alg->right_mult(idem.elem));  // ambient basis of P(v)
        for (int c = 0; c < tv.cols; ++c) {
            const Vec& gen = generators[g++];
            for (int pc = 0; pc < u.cols; ++pc) {
                Vec img = mat_vec(m.act(u.column(pc)), gen);
                for (int r = 0; r < m.dim; ++r) epi.at(r, off + pc) = img[r];
            }
            off += u.cols;
        }
    }
    out.epi = Morphism{out.proj_module, m, epi};
    return out;
}

bool is_projective(const Module& m) {
    if (m.dim == 0) return true;
    Cover c = projective_cover(m);
    if (c.proj_module.dim != m.dim) return false;
    return inverse(c.epi.mat).has_value();
}

Module dual(const Module& m) {
    Module out;
    out.alg = opposite(*m.alg);
    out.dim = m.dim;
    for (const Mat& a : m.action) out.action.push_back(a.transpose());
    return out;
}

TensorResult tensor_space(const Module& m_right_as_op, const Module& n) {
    const Module& m = m_right_as_op;
    if (!m.alg->same_tables(*opposite(*n.alg)))
        throw std::runtime_error("algebra mismatch");
    int mn = m.dim * n.dim;
    int nb = n.alg->dim;
    Mat rels(mn, mn * nb);
    for (int b = 0; b < nb; ++b) {
        Mat d = kron(m.action[b], Mat::identity(n.dim)) - kron(Mat::identity(m.dim), n.action[b]);
        for (int r = 0; r < mn; ++r)
            for (int c = 0; c < mn; ++c) rels.at(r, b * mn + c) = d.at(r, c);
    }
    CokernelProjection cp = cokernel_projection(rels);
    TensorResult out;
    out.dim = cp.quotient_dim;
    out.proj = cp.projection;
    out.section = cp.section;
    return out;
}

BimoduleTensor tensor(const Bimodule& m, const Module& n) {
    BimoduleTensor out;
    out.space = tensor_space(m.as_right_module(), n);
    out.module.alg = m.left_alg;
    out.module.dim = out.space.dim;
    for (int b = 0; b < m.left_alg->dim; ++b)
        out.module.action.push_back(out.space.proj * kron(m.left_action[b], Mat::identity(n.dim)) *
                                    out.space.section);
    return out;
}

IsoResult is_isomorphic(const Module& m, const Module& n, int samples, std::mt19937_64& rng) {
    require_same_algebra(m, n);
    if (m.dim != n.dim) return {IsoResult::No, std::nullopt, "dimension mismatch"};
    if (m.dim == 0) return {IsoResult::Yes, Morphism{m, n, Mat(0, 0)}, ""};
    auto fwd = hom_space(m, n);
    auto bwd = hom_space(n, m);
    if (fwd.empty() || bwd.empty())
        return {IsoResult::No, std::nullopt, "hom space vanishes in one direction"};
    for (const Morphism& f : fwd)
        if (inverse(f.mat)) return {IsoResult::Yes, f, ""};
    std::uniform_int_distribution<i64> dist(0, fp::modulus() - 1);
    for (int s = 0; s < samples; ++s) {
        Mat cand(n.dim, m.dim);
        for (const Morphism& f : fwd) cand = cand + scale(f.mat, dist(rng));
        if (inverse(cand)) return {IsoResult::Yes, Morphism{m, n, cand}, ""};
    }
    return {IsoResult::Undetermined, std::nullopt, ""};
}

IsoResult is_isomorphic(const Module& m, const Module& n) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    return is_isomorphic(m, n, 32, rng);
}

}  // namespace qha

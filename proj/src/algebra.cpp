#include "qha/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qha {

int Quiver::vertex_index(const std::string& v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return static_cast<int>(i);
    return -1;
}

int Quiver::arrow_index(const std::string& a) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == a) return static_cast<int>(i);
    return -1;
}

void Quiver::validate() const {
    std::set<std::string> labels(vertices.begin(), vertices.end());
    if (labels.size() != vertices.size()) throw std::runtime_error("duplicate vertex label");
    for (const auto& a : arrows) {
        if (labels.count(a.name)) throw std::runtime_error("arrow label clashes with vertex: " + a.name);
        if (vertex_index(a.source) < 0 || vertex_index(a.target) < 0)
            throw std::runtime_error("arrow endpoint not a declared vertex: " + a.name);
    }
    std::set<std::string> anames;
    for (const auto& a : arrows)
        if (!anames.insert(a.name).second) throw std::runtime_error("duplicate arrow label: " + a.name);
}

int Path::target(const Quiver& q) const {
    if (arrows.empty()) return source_vertex;
    return q.vertex_index(q.arrows[arrows.back()].target);
}

std::string Path::label(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertices[source_vertex];
    std::string s;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].name;
    }
    return s;
}

Vec FDAlgebra::mul(const Vec& a, const Vec& b) const {
    Vec out(dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            i64 c = fp::mul(fp::normalize(a[i]), fp::normalize(b[j]));
            const Vec& pr = product[i][j];
            for (int k = 0; k < dim; ++k)
                if (pr[k] != 0) out[k] = fp::add(out[k], fp::mul(c, pr[k]));
        }
    }
    return out;
}

Mat FDAlgebra::left_mult(const Vec& a) const {
    Mat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec col = mul(a, basis_elem(j));
        for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Mat FDAlgebra::right_mult(const Vec& a) const {
    Mat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec col = mul(basis_elem(j), a);
        for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Vec FDAlgebra::basis_elem(int i) const {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
}

int FDAlgebra::vertex_pos(const std::string& v) const {
    for (size_t i = 0; i < idems.size(); ++i)
        if (idems[i].vertex == v) return static_cast<int>(i);
    return -1;
}

Vec FDAlgebra::idempotent_sum(const std::vector<std::string>& vertices) const {
    Vec e(dim, 0);
    for (const auto& v : vertices) {
        int p = vertex_pos(v);
        if (p < 0) throw std::runtime_error("unknown vertex in idempotent: " + v);
        for (int i = 0; i < dim; ++i) e[i] = fp::add(e[i], idems[p].elem[i]);
    }
    return e;
}

namespace {

bool in_span(const Mat& span_cols, const Vec& v) {
    if (span_cols.cols == 0) {
        for (i64 x : v)
            if (fp::normalize(x) != 0) return false;
        return true;
    }
    return solve(span_cols, v).has_value();
}

Mat columns_of(const std::vector<Vec>& vs, int dim) {
    return Mat::from_columns(vs, dim);
}

}  // namespace

void FDAlgebra::validate() const {
    if (fp::modulus() != modulus) throw std::runtime_error("algebra built under a different modulus");
    // associativity on basis triples
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec ij = product[i][j];
            for (int k = 0; k < dim; ++k) {
                Vec lhs = mul(ij, basis_elem(k));
                Vec rhs = mul(basis_elem(i), product[j][k]);
                if (lhs != rhs) throw std::runtime_error("associativity fails on basis triple");
            }
        }
    // unit laws
    for (int i = 0; i < dim; ++i) {
        if (mul(unit, basis_elem(i)) != basis_elem(i) || mul(basis_elem(i), unit) != basis_elem(i))
            throw std::runtime_error("unit law fails");
    }
    // idempotents
    Vec sum(dim, 0);
    for (size_t a = 0; a < idems.size(); ++a) {
        if (mul(idems[a].elem, idems[a].elem) != idems[a].elem)
            throw std::runtime_error("idempotent not idempotent: " + idems[a].vertex);
        for (size_t b = 0; b < idems.size(); ++b) {
            if (a == b) continue;
            if (mul(idems[a].elem, idems[b].elem) != Vec(dim, 0))
                throw std::runtime_error("idempotents not orthogonal");
        }
        for (int i = 0; i < dim; ++i) sum[i] = fp::add(sum[i], idems[a].elem[i]);
    }
    if (sum != unit) throw std::runtime_error("idempotents do not sum to the unit");
    // radical: two-sided ideal and nilpotent
    Mat rad_cols = columns_of(radical, dim);
    for (int i = 0; i < dim; ++i)
        for (const Vec& r : radical) {
            if (!in_span(rad_cols, mul(basis_elem(i), r)) || !in_span(rad_cols, mul(r, basis_elem(i))))
                throw std::runtime_error("radical is not a two-sided ideal");
        }
    std::vector<Vec> power = radical;
    for (int n = 0; n < dim + 1 && !power.empty(); ++n) {
        std::vector<Vec> next;
        for (const Vec& r : power)
            for (const Vec& s : radical) {
                Vec pr = mul(r, s);
                if (pr != Vec(dim, 0)) next.push_back(pr);
            }
        if (next.empty()) {
            power.clear();
            break;
        }
        // reduce to a basis to keep the iteration bounded
        Mat m(static_cast<int>(next.size()), dim);
        for (size_t r = 0; r < next.size(); ++r)
            for (int c = 0; c < dim; ++c) m.at(static_cast<int>(r), c) = fp::normalize(next[r][c]);
        power = row_space_basis(m);
        if (n == dim) throw std::runtime_error("radical is not nilpotent");
    }
}

bool FDAlgebra::same_tables(const FDAlgebra& o) const {
    if (dim != o.dim || unit != o.unit) return false;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (product[i][j] != o.product[i][j]) return false;
    return true;
}

namespace {

struct PathTable {
    std::vector<Path> paths;                       // ordered: length, then arrow sequence
    std::map<std::pair<int, std::vector<int>>, int> index;

    int find(const Path& p) const {
        auto it = index.find({p.source_vertex, p.arrows});
        return it == index.end() ? -1 : it->second;
    }
};

PathTable enumerate_paths(const Quiver& q, int max_len) {
    PathTable t;
    std::vector<Path> frontier;
    for (size_t v = 0; v < q.vertices.size(); ++v) {
        Path p;
        p.source_vertex = static_cast<int>(v);
        frontier.push_back(p);
    }
    for (int len = 0; len <= max_len; ++len) {
        std::sort(frontier.begin(), frontier.end(), [](const Path& a, const Path& b) {
            if (a.source_vertex != b.source_vertex) return a.source_vertex < b.source_vertex;
            return a.arrows < b.arrows;
        });
        std::vector<Path> next;
        for (const Path& p : frontier) {
            t.index[{p.source_vertex, p.arrows}] = static_cast<int>(t.paths.size());
            t.paths.push_back(p);
            if (t.paths.size() > 200000) throw std::runtime_error("path enumeration limit exceeded; lower length_cap");
            if (len == max_len) continue;
            int tail = p.target(q);
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.vertex_index(q.arrows[a].source) != tail) continue;
                Path ext = p;
                ext.arrows.push_back(static_cast<int>(a));
                next.push_back(ext);
            }
        }
        frontier = std::move(next);
    }
    return t;
}

// concatenation "u after w": w first, then u; requires source(u) = target(w)
Path compose(const Path& u, const Path& w, const Quiver& q) {
    Path out;
    out.source_vertex = w.source_vertex;
    out.arrows = w.arrows;
    out.arrows.insert(out.arrows.end(), u.arrows.begin(), u.arrows.end());
    (void)q;
    return out;
}

}  // namespace

QuiverAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels, int length_cap) {
    q.validate();
    if (length_cap < 2) throw std::runtime_error("cap exceeded: length_cap must be >= 2");
    for (const auto& rel : rels) {
        if (rel.terms.empty()) throw std::runtime_error("not admissible: empty relation");
        int src = rel.terms[0].path.source_vertex;
        int tgt = rel.terms[0].path.target(q);
        for (const auto& t : rel.terms) {
            if (t.path.length() < 2) throw std::runtime_error("not admissible: relation term of length < 2");
            if (t.path.source_vertex != src || t.path.target(q) != tgt)
                throw std::runtime_error("relation terms not parallel");
        }
    }

    PathTable table = enumerate_paths(q, length_cap);
    int npaths = static_cast<int>(table.paths.size());

    // Ideal closure: pad every relation with all prefixes/suffixes that keep
    // the longest term inside the cap, then reduce.
    std::vector<Vec> ideal_rows;
    for (const auto& rel : rels) {
        int src = rel.terms[0].path.source_vertex;
        int tgt = rel.terms[0].path.target(q);
        int max_len = 0;
        for (const auto& t : rel.terms) max_len = std::max(max_len, t.path.length());
        for (const Path& w : table.paths) {          // right pad: applied first
            if (w.target(q) != src) continue;
            for (const Path& u : table.paths) {      // left pad: applied last
                if (u.source_vertex != tgt) continue;
                if (w.length() + max_len + u.length() > length_cap) continue;
                Vec row(npaths, 0);
                for (const auto& t : rel.terms) {
                    Path padded = compose(u, compose(t.path, w, q), q);
                    int idx = table.find(padded);
                    if (idx < 0) throw std::runtime_error("internal: padded path not enumerated");
                    row[idx] = fp::add(row[idx], fp::normalize(t.coeff));
                }
                ideal_rows.push_back(std::move(row));
            }
        }
    }

    Mat ideal(static_cast<int>(ideal_rows.size()), npaths);
    for (size_t r = 0; r < ideal_rows.size(); ++r)
        for (int c = 0; c < npaths; ++c) ideal.at(static_cast<int>(r), c) = ideal_rows[r][c];
    Rref red = rref(ideal);
    std::vector<bool> is_pivot(npaths, false);
    for (int p : red.pivots) is_pivot[p] = true;

    // residue of a path-indexed vector modulo the ideal
    auto reduce = [&](Vec v) {
        for (size_t i = 0; i < red.pivots.size(); ++i) {
            i64 f = fp::normalize(v[red.pivots[i]]);
            if (f == 0) continue;
            for (int c = 0; c < npaths; ++c)
                v[c] = fp::sub(fp::normalize(v[c]), fp::mul(f, red.mat.at(static_cast<int>(i), c)));
        }
        return v;
    };

    // finite-dimensionality certificate: every path of full cap length dies
    for (int i = 0; i < npaths; ++i) {
        if (table.paths[i].length() != length_cap) continue;
        Vec v(npaths, 0);
        v[i] = 1;
        if (reduce(v) != Vec(npaths, 0))
            throw std::runtime_error("cap exceeded: path of length " + std::to_string(length_cap) +
                                     " is nonzero modulo the ideal");
    }

    // quotient basis: non-pivot paths of length < cap
    std::vector<int> basis_path_idx;
    std::vector<int> coord_of_path(npaths, -1);
    for (int i = 0; i < npaths; ++i) {
        if (is_pivot[i] || table.paths[i].length() >= length_cap) continue;
        coord_of_path[i] = static_cast<int>(basis_path_idx.size());
        basis_path_idx.push_back(i);
    }
    int dim = static_cast<int>(basis_path_idx.size());

    auto to_quotient = [&](const Vec& full) {
        Vec red_v = reduce(full);
        Vec out(dim, 0);
        for (int i = 0; i < npaths; ++i) {
            if (red_v[i] == 0) continue;
            if (coord_of_path[i] < 0) throw std::runtime_error("internal: residue outside quotient basis");
            out[coord_of_path[i]] = red_v[i];
        }
        return out;
    };

    auto alg = std::make_shared<FDAlgebra>();
    alg->dim = dim;
    alg->modulus = fp::modulus();
    for (int b : basis_path_idx) alg->basis_names.push_back(table.paths[b].label(q));
    alg->product.assign(dim, std::vector<Vec>(dim, Vec(dim, 0)));
    for (int i = 0; i < dim; ++i) {
        const Path& pi = table.paths[basis_path_idx[i]];
        for (int j = 0; j < dim; ++j) {
            const Path& pj = table.paths[basis_path_idx[j]];
            // b_i * b_j applies pj first
            if (pj.target(q) != pi.source_vertex) continue;
            Path prod = compose(pi, pj, q);
            if (prod.length() > length_cap) continue;  // certified zero
            int idx = table.find(prod);
            Vec full(npaths, 0);
            full[idx] = 1;
            alg->product[i][j] = to_quotient(full);
        }
    }
    alg->unit.assign(dim, 0);
    for (size_t v = 0; v < q.vertices.size(); ++v) {
        Path triv;
        triv.source_vertex = static_cast<int>(v);
        int coord = coord_of_path[table.find(triv)];
        FDAlgebra::Idem idem;
        idem.vertex = q.vertices[v];
        idem.elem.assign(dim, 0);
        idem.elem[coord] = 1;
        alg->unit[coord] = 1;
        alg->idems.push_back(std::move(idem));
    }
    for (int i = 0; i < dim; ++i) {
        if (table.paths[basis_path_idx[i]].length() == 0) continue;
        Vec r(dim, 0);
        r[i] = 1;
        alg->radical.push_back(std::move(r));
    }
    alg->validate();

    QuiverAlgebra out;
    out.quiver = q;
    out.alg = alg;
    for (int b : basis_path_idx) out.basis_paths.push_back(table.paths[b]);
    out.length_cap = length_cap;
    return out;
}

AlgebraPtr corner(const FDAlgebra& r, const std::vector<std::string>& vertices) {
    return corner_data(r, vertices).alg;
}

CornerData corner_data(const FDAlgebra& r, const std::vector<std::string>& vertices) {
    if (vertices.empty()) throw std::runtime_error("corner: empty vertex subset");
    Vec e = r.idempotent_sum(vertices);
    Mat pinch = r.left_mult(e) * r.right_mult(e);  // x -> e x e
    Mat basis = column_space_basis(pinch);
    int dim = basis.cols;

    auto coords = [&](const Vec& x) {
        auto c = solve(basis, x);
        if (!c) throw std::runtime_error("internal: corner element outside eRe");
        return *c;
    };

    auto alg = std::make_shared<FDAlgebra>();
    alg->dim = dim;
    alg->modulus = fp::modulus();
    for (int c = 0; c < dim; ++c) {
        // reuse the ambient basis name when the column is a standard basis vector
        Vec col = basis.column(c);
        int hit = -1;
        bool standard = true;
        for (int i = 0; i < r.dim; ++i) {
            if (col[i] == 0) continue;
            if (hit >= 0 || col[i] != 1) {
                standard = false;
                break;
            }
            hit = i;
        }
        alg->basis_names.push_back(standard && hit >= 0 ? r.basis_names[hit] : "c" + std::to_string(c));
    }
    alg->product.assign(dim, std::vector<Vec>(dim, Vec(dim, 0)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) alg->product[i][j] = coords(r.mul(basis.column(i), basis.column(j)));
    alg->unit = coords(e);
    for (const auto& v : vertices) {
        FDAlgebra::Idem idem;
        idem.vertex = v;
        idem.elem = coords(r.idems[r.vertex_pos(v)].elem);
        alg->idems.push_back(std::move(idem));
    }
    // radical = e rad(R) e
    std::vector<Vec> rad_imgs;
    for (const Vec& rv : r.radical) {
        Vec img = mat_vec(pinch, rv);
        if (img != Vec(r.dim, 0)) rad_imgs.push_back(coords(img));
    }
    if (!rad_imgs.empty()) {
        Mat m(static_cast<int>(rad_imgs.size()), dim);
        for (size_t i = 0; i < rad_imgs.size(); ++i)
            for (int c = 0; c < dim; ++c) m.at(static_cast<int>(i), c) = fp::normalize(rad_imgs[i][c]);
        alg->radical = row_space_basis(m);
    }
    alg->validate();
    return CornerData{alg, basis};
}

AlgebraPtr opposite(const FDAlgebra& r) {
    auto alg = std::make_shared<FDAlgebra>(r);
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j) alg->product[i][j] = r.product[j][i];
    alg->validate();
    return alg;
}

}  // namespace qha

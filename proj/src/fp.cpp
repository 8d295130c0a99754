#include "qha/fp.hpp"

#include <stdexcept>

namespace qha {

namespace fp {

namespace {
i64 g_modulus = 101;
}

i64 modulus() { return g_modulus; }

void set_modulus(i64 p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("modulus must be prime");
    g_modulus = p;
}

i64 normalize(i64 x) {
    i64 r = x % g_modulus;
    return r < 0 ? r + g_modulus : r;
}

i64 add(i64 a, i64 b) { return (a + b) % g_modulus; }
i64 sub(i64 a, i64 b) { return normalize(a - b); }
i64 mul(i64 a, i64 b) { return (a * b) % g_modulus; }
i64 neg(i64 a) { return normalize(-a); }

i64 inv(i64 a) {
    a = normalize(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid
    i64 t = 0, nt = 1, r = g_modulus, nr = a;
    while (nr != 0) {
        i64 q = r / nr;
        i64 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return normalize(t);
}

}  // namespace fp

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, int rows) {
    Mat m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < rows; ++r) m.at(r, c) = fp::normalize(cols[c][r]);
    return m;
}

Mat Mat::row_vector(const Vec& v) {
    Mat m(1, static_cast<int>(v.size()));
    for (int c = 0; c < m.cols; ++c) m.at(0, c) = fp::normalize(v[c]);
    return m;
}

bool Mat::is_zero() const {
    for (i64 x : data)
        if (x != 0) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

Vec Mat::column(int c) const {
    Vec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

Vec Mat::row(int r) const {
    Vec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            i64 aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = (out.at(i, j) + aik * b.at(k, j)) % fp::modulus();
        }
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix sum shape mismatch");
    Mat out(a.rows, a.cols);
    for (size_t i = 0; i < a.data.size(); ++i) out.data[i] = fp::add(a.data[i], b.data[i]);
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix diff shape mismatch");
    Mat out(a.rows, a.cols);
    for (size_t i = 0; i < a.data.size(); ++i) out.data[i] = fp::sub(a.data[i], b.data[i]);
    return out;
}

Mat scale(const Mat& a, i64 s) {
    Mat out(a.rows, a.cols);
    s = fp::normalize(s);
    for (size_t i = 0; i < a.data.size(); ++i) out.data[i] = fp::mul(a.data[i], s);
    return out;
}

Vec mat_vec(const Mat& a, const Vec& v) {
    if (static_cast<int>(v.size()) != a.cols) throw std::invalid_argument("mat_vec shape mismatch");
    Vec out(a.rows, 0);
    for (int i = 0; i < a.rows; ++i) {
        i64 s = 0;
        for (int j = 0; j < a.cols; ++j) s = (s + a.at(i, j) * fp::normalize(v[j])) % fp::modulus();
        out[i] = s;
    }
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows * b.rows, a.cols * b.cols);
    for (int ia = 0; ia < a.rows; ++ia)
        for (int ja = 0; ja < a.cols; ++ja) {
            i64 v = a.at(ia, ja);
            if (v == 0) continue;
            for (int ib = 0; ib < b.rows; ++ib)
                for (int jb = 0; jb < b.cols; ++jb)
                    out.at(ia * b.rows + ib, ja * b.cols + jb) = fp::mul(v, b.at(ib, jb));
        }
    return out;
}

Rref rref(const Mat& m) {
    Rref out;
    out.mat = m;
    for (auto& x : out.mat.data) x = fp::normalize(x);
    Mat& a = out.mat;
    int pr = 0;  // current pivot row
    for (int c = 0; c < a.cols && pr < a.rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < a.rows; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != pr)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(pr, j));
        i64 inv = fp::inv(a.at(pr, c));
        for (int j = 0; j < a.cols; ++j) a.at(pr, j) = fp::mul(a.at(pr, j), inv);
        for (int r = 0; r < a.rows; ++r) {
            if (r == pr) continue;
            i64 f = a.at(r, c);
            if (f == 0) continue;
            for (int j = 0; j < a.cols; ++j) a.at(r, j) = fp::sub(a.at(r, j), fp::mul(f, a.at(pr, j)));
        }
        out.pivots.push_back(c);
        ++pr;
    }
    return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols, 0);
        v[c] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = fp::neg(r.mat.at(static_cast<int>(i), c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve shape mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = fp::normalize(b[r]);
    }
    Rref rr = rref(aug);
    for (int p : rr.pivots)
        if (p == m.cols) return std::nullopt;
    Vec x(m.cols, 0);
    for (size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.mat.at(static_cast<int>(i), m.cols);
    return x;
}

std::optional<Mat> solve_mat(const Mat& m, const Mat& b) {
    if (b.rows != m.rows) throw std::invalid_argument("solve_mat shape mismatch");
    Mat x(m.cols, b.cols);
    for (int c = 0; c < b.cols; ++c) {
        auto col = solve(m, b.column(c));
        if (!col) return std::nullopt;
        for (int r = 0; r < m.cols; ++r) x.at(r, c) = (*col)[r];
    }
    return x;
}

CokernelProjection cokernel_projection(const Mat& m) {
    // Column space = row space of the transpose.
    Rref r = rref(m.transpose());
    std::vector<bool> is_pivot(m.rows, false);
    for (int p : r.pivots) is_pivot[p] = true;
    CokernelProjection out;
    out.quotient_dim = m.rows - static_cast<int>(r.pivots.size());
    out.projection = Mat(out.quotient_dim, m.rows);
    out.section = Mat(m.rows, out.quotient_dim);
    int q = 0;
    for (int coord = 0; coord < m.rows; ++coord) {
        if (is_pivot[coord]) continue;
        // residue of e_coord after reducing by the RREF rows
        out.projection.at(q, coord) = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i)
            out.projection.at(q, r.pivots[i]) = fp::neg(r.mat.at(static_cast<int>(i), coord));
        out.section.at(coord, q) = 1;
        ++q;
    }
    return out;
}

Mat column_space_basis(const Mat& m) {
    Rref r = rref(m);
    std::vector<Vec> cols;
    for (int p : r.pivots) cols.push_back(m.column(p));
    return Mat::from_columns(cols, m.rows);
}

std::vector<Vec> row_space_basis(const Mat& m) {
    Rref r = rref(m);
    std::vector<Vec> rows;
    for (size_t i = 0; i < r.pivots.size(); ++i) rows.push_back(r.mat.row(static_cast<int>(i)));
    return rows;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) return std::nullopt;
    auto x = solve_mat(m, Mat::identity(m.rows));
    if (!x) return std::nullopt;
    if (!((*x * m) == Mat::identity(m.rows))) return std::nullopt;
    return x;
}

}  // namespace qha

#ifndef QHA_FP_HPP
#define QHA_FP_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace qha {

using i64 = std::int64_t;
using Vec = std::vector<i64>;

/// Arithmetic over F_p. The modulus is a session-wide setting; every stored
/// scalar is normalized to [0, p).
namespace fp {

i64 modulus();
void set_modulus(i64 p);

i64 normalize(i64 x);
i64 add(i64 a, i64 b);
i64 sub(i64 a, i64 b);
i64 mul(i64 a, i64 b);
i64 neg(i64 a);
i64 inv(i64 a);  // a != 0

}  // namespace fp

/// Dense row-major matrix over F_p.
struct Mat {
    int rows = 0;
    int cols = 0;
    Vec data;  // rows*cols entries, normalized

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

    i64& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n);
    static Mat zero(int r, int c) { return Mat(r, c); }
    static Mat from_columns(const std::vector<Vec>& cols, int rows);
    static Mat row_vector(const Vec& v);

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && data == o.data; }

    Mat transpose() const;
    Vec column(int c) const;
    Vec row(int r) const;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat scale(const Mat& a, i64 s);
Vec mat_vec(const Mat& a, const Vec& v);

/// Kronecker product, row-major block convention.
Mat kron(const Mat& a, const Mat& b);

/// Row rank, exact.
int rank(const Mat& m);

/// Reduced row echelon form with deterministic pivoting (first nonzero row in
/// column order). Returns the RREF and the pivot column indices.
struct Rref {
    Mat mat;
    std::vector<int> pivots;
};
Rref rref(const Mat& m);

/// Basis of the right null space; size = cols - rank.
std::vector<Vec> kernel_basis(const Mat& m);

/// Some x with m*x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Solve m*X = B columnwise; nullopt when any column is inconsistent.
std::optional<Mat> solve_mat(const Mat& m, const Mat& b);

/// Projection from the codomain F^rows onto the deterministic complement of
/// the column space. projection * m = 0; projection has full row rank.
struct CokernelProjection {
    int quotient_dim = 0;
    Mat projection;  // quotient_dim x rows
    Mat section;     // rows x quotient_dim, projection*section = id
};
CokernelProjection cokernel_projection(const Mat& m);

/// Deterministic basis of the column space (as a rows x rank matrix).
Mat column_space_basis(const Mat& m);

/// Deterministic basis of the row space of m (RREF nonzero rows).
std::vector<Vec> row_space_basis(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

}  // namespace qha

#endif

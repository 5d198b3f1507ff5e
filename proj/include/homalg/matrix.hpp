#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homalg/field.hpp"

namespace homalg {

/// Dense row-major matrix over GF(p). Value type; all operations are exact and
/// deterministic (no pivot choice depends on timing or thread count).
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw bad_input("negative matrix shape");
    }

    static Matrix zero(Field f, int rows, int cols) { return Matrix(f, rows, cols); }
    static Matrix identity(Field f, int n);
    /// Row-major literal; rows may be empty (0 x 0).
    static Matrix from_rows(Field f, const std::vector<std::vector<std::uint32_t>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return f_; }

    std::uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::uint32_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v % f_.p; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return f_.p == o.f_.p && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // OpenMP kernel for large sizes
    Matrix scaled(std::uint32_t c) const;
    Matrix negated() const { return scaled(f_.neg(1)); }
    Matrix transpose() const;

    /// [this | o] side by side; row counts must match.
    Matrix hstack(const Matrix& o) const;
    /// [this; o] stacked; column counts must match.
    Matrix vstack(const Matrix& o) const;
    Matrix submatrix(int r0, int c0, int nrows, int ncols) const;
    /// Copies src into this at offset (r0, c0). Mutating; used only during assembly.
    void paste(int r0, int c0, const Matrix& src);

    /// Column vector of all entries, row-major. Right inverse of reshape.
    Matrix vectorized() const;
    static Matrix reshape(const Matrix& colvec, int rows, int cols);

private:
    Field f_;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

struct RrefResult {
    Matrix r;
    std::vector<int> pivots;  // pivot column indices, increasing
    int rank = 0;
};

/// Reduced row echelon form. Deterministic: leftmost pivot column first,
/// topmost available row as pivot row.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Solves a * x = b (b may have several columns). Free variables are set to 0,
/// so the solution is canonical. Absent iff the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Columns form a basis of the right kernel {x : a x = 0}, ordered by the
/// increasing free-column index they correspond to.
Matrix kernel_basis(const Matrix& a);

/// Kronecker product; vectorized(A*X*B) = kron(A, B^T) * vectorized(X) under
/// the row-major vectorization used here.
Matrix kron(const Matrix& a, const Matrix& b);

/// Serial reference kernels, kept alongside the OpenMP versions so tests and
/// the benchmark tool can compare them.
namespace ref {
Matrix mul_serial(const Matrix& a, const Matrix& b);
RrefResult rref_serial(const Matrix& m);
}  // namespace ref

}  // namespace homalg

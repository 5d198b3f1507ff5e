#include "homalg/matrix.hpp"

namespace homalg {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.field().p != b.field().p) throw bad_input("field mismatch");
}

}  // namespace

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<std::uint32_t>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw bad_input("ragged matrix literal");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw bad_input("shape mismatch in add");
    Matrix out(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], o.a_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw bad_input("shape mismatch in sub");
    Matrix out(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(a_[i], o.a_[i]);
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(*this, o);
    if (cols_ != o.rows_) throw bad_input("shape mismatch in mul");
    Matrix out(f_, rows_, o.cols_);
    const int n = rows_, k = cols_, c = o.cols_;
    const std::uint64_t p = f_.p;
    // Each output row is independent; deterministic under any schedule.
#pragma omp parallel for schedule(static) if (static_cast<long long>(n) * k * c > 32768)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) {
            std::uint64_t acc = 0;
            for (int t = 0; t < k; ++t)
                acc += static_cast<std::uint64_t>(at(i, t)) * o.at(t, j);
            out.a_[static_cast<size_t>(i) * c + j] = static_cast<std::uint32_t>(acc % p);
        }
    }
    return out;
}

Matrix Matrix::scaled(std::uint32_t c) const {
    Matrix out(f_, rows_, cols_);
    c %= f_.p;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.mul(a_[i], c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_) throw bad_input("row mismatch in hstack");
    Matrix out(f_, rows_, cols_ + o.cols_);
    out.paste(0, 0, *this);
    out.paste(0, cols_, o);
    return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
    require_same_field(*this, o);
    if (cols_ != o.cols_) throw bad_input("col mismatch in vstack");
    Matrix out(f_, rows_ + o.rows_, cols_);
    out.paste(0, 0, *this);
    out.paste(rows_, 0, o);
    return out;
}

Matrix Matrix::submatrix(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw bad_input("submatrix out of range");
    Matrix out(f_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) out.set(i, j, at(r0 + i, c0 + j));
    return out;
}

void Matrix::paste(int r0, int c0, const Matrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw bad_input("paste out of range");
    for (int i = 0; i < src.rows_; ++i)
        for (int j = 0; j < src.cols_; ++j) set(r0 + i, c0 + j, src.at(i, j));
}

Matrix Matrix::vectorized() const {
    Matrix out(f_, rows_ * cols_, 1);
    for (int i = 0; i < rows_ * cols_; ++i) out.a_[i] = a_[i];
    return out;
}

Matrix Matrix::reshape(const Matrix& colvec, int rows, int cols) {
    if (colvec.cols() != 1 || colvec.rows() != rows * cols)
        throw bad_input("reshape size mismatch");
    Matrix out(colvec.field(), rows, cols);
    for (int i = 0; i < rows * cols; ++i) out.a_[i] = colvec.a_[i];
    return out;
}

namespace {

// Shared elimination loop. When `parallel` the per-pivot row updates run under
// OpenMP; each row update reads only the pivot row and its own old value, so
// the result is identical to the serial run.
RrefResult rref_impl(const Matrix& m, bool parallel) {
    RrefResult res{m, {}, 0};
    Matrix& r = res.r;
    const Field f = m.field();
    const int nr = m.rows(), nc = m.cols();
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int i = row; i < nr; ++i)
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < nc; ++j) {
                auto tmp = r.at(row, j);
                r.set(row, j, r.at(piv, j));
                r.set(piv, j, tmp);
            }
        const std::uint32_t inv = f.inv(r.at(row, col));
        if (inv != 1)
            for (int j = col; j < nc; ++j) r.set(row, j, f.mul(r.at(row, j), inv));
#pragma omp parallel for schedule(static) if (parallel && static_cast<long long>(nr) * nc > 32768)
        for (int i = 0; i < nr; ++i) {
            if (i == row) continue;
            const std::uint32_t c = r.at(i, col);
            if (c == 0) continue;
            for (int j = col; j < nc; ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(row, j))));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = static_cast<int>(res.pivots.size());
    return res;
}

}  // namespace

RrefResult rref(const Matrix& m) { return rref_impl(m, true); }

int rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw bad_input("rhs row mismatch in solve");
    const int n = a.cols(), k = b.cols();
    RrefResult rr = rref(a.hstack(b));
    // A pivot landing in the rhs block means some equation reduced to 0 = 1.
    for (int c : rr.pivots)
        if (c >= n) return std::nullopt;
    Matrix x(a.field(), n, k);
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        for (int j = 0; j < k; ++j) x.set(rr.pivots[i], j, rr.r.at(static_cast<int>(i), n + j));
    return x;
}

Matrix kernel_basis(const Matrix& a) {
    RrefResult rr = rref(a);
    const int n = a.cols();
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < n; ++c) {
            if (pi < rr.pivots.size() && rr.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Matrix k(a.field(), n, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        k.set(free_cols[j], static_cast<int>(j), 1);
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            k.set(rr.pivots[i], static_cast<int>(j),
                  a.field().neg(rr.r.at(static_cast<int>(i), free_cols[j])));
    }
    return k;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const std::uint32_t c = a.at(i, j);
            if (c == 0) continue;
            for (int r = 0; r < b.rows(); ++r)
                for (int s = 0; s < b.cols(); ++s)
                    out.set(i * b.rows() + r, j * b.cols() + s,
                            a.field().mul(c, b.at(r, s)));
        }
    return out;
}

namespace ref {

Matrix mul_serial(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw bad_input("shape mismatch in mul");
    Matrix out(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (int t = 0; t < a.cols(); ++t)
                acc += static_cast<std::uint64_t>(a.at(i, t)) * b.at(t, j);
            out.set(i, j, static_cast<std::uint32_t>(acc % a.field().p));
        }
    return out;
}

RrefResult rref_serial(const Matrix& m) { return rref_impl(m, false); }

}  // namespace ref

}  // namespace homalg

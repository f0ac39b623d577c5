#include "sll/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "sll/errors.hpp"

namespace sll {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows,
                         std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatchError("ragged row list");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c].field() != field) throw FieldMismatchError("entry field differs from matrix field");
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t nrows = rows.size();
    std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
    Matrix m(field, nrows, ncols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw DimensionMismatchError("ragged row list");
        std::size_t c = 0;
        for (long long v : row) m.set(r, c++, Scalar(field, v));
        ++r;
    }
    return m;
}

Matrix Matrix::from_strings(const FieldSpec& field,
                            std::initializer_list<std::initializer_list<const char*>> rows) {
    std::size_t nrows = rows.size();
    std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
    Matrix m(field, nrows, ncols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw DimensionMismatchError("ragged row list");
        std::size_t c = 0;
        for (const char* v : row) m.set(r, c++, Scalar::parse(field, v));
        ++r;
    }
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Scalar value) {
    if (value.field() != field_) throw FieldMismatchError("entry field differs from matrix field");
    entries_[r * cols_ + c] = std::move(value);
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    }
    return true;
}

void Matrix::require_compatible(const Matrix& other, const char* what) const {
    if (field_ != other.field_) throw FieldMismatchError(what);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_compatible(b, "matrix addition across fields");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatchError("matrix addition shape");
    Matrix m = a;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_compatible(b, "matrix subtraction across fields");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatchError("matrix subtraction shape");
    Matrix m = a;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_compatible(b, "matrix product across fields");
    if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product shape");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                if (b.at(k, c).is_zero()) continue;
                m.entries_[r * m.cols_ + c] += ark * b.at(k, c);
            }
        }
    }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    if (s.field() != m.field_) throw FieldMismatchError("scalar multiple across fields");
    Matrix out = m;
    for (auto& e : out.entries_) e *= s;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix bracket(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

Matrix Matrix::pow(std::size_t k) const {
    if (!is_square()) throw DimensionMismatchError("power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Matrix::RrefResult Matrix::rref() const {
    RrefResult out{*this, {}, 0};
    Matrix& m = out.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row) {
            for (std::size_t c = 0; c < cols_; ++c) {
                std::swap(m.entries_[sel * cols_ + c], m.entries_[pivot_row * cols_ + c]);
            }
        }
        Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < cols_; ++c) {
            m.entries_[pivot_row * cols_ + c] *= inv;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Scalar factor = m.at(r, col);
            for (std::size_t c = col; c < cols_; ++c) {
                m.entries_[r * cols_ + c] -= factor * m.at(pivot_row, c);
            }
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.rank = out.pivots.size();
    return out;
}

std::size_t Matrix::rank() const {
    return rref().rank;
}

Matrix Matrix::kernel() const {
    RrefResult r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::size_t nullity = cols_ - r.rank;
    Matrix basis(field_, nullity, cols_);
    std::size_t row = 0;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(row, free_col, Scalar::one(field_));
        for (std::size_t pr = 0; pr < r.rank; ++pr) {
            const Scalar& coeff = r.reduced.at(pr, free_col);
            if (!coeff.is_zero()) basis.set(row, r.pivots[pr], -coeff);
        }
        ++row;
    }
    return basis.rref().reduced;
}

Matrix Matrix::image() const {
    RrefResult r = transpose().rref();
    Matrix basis(field_, r.rank, rows_);
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t c = 0; c < rows_; ++c) basis.set(i, c, r.reduced.at(i, c));
    }
    return basis;
}

Matrix Matrix::matpow_kernel(std::size_t k) const {
    if (!is_square()) throw DimensionMismatchError("matpow_kernel of a non-square matrix");
    return pow(k).kernel();
}

std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) return std::nullopt;
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.set(r, c, at(r, c));
        aug.set(r, cols_ + r, Scalar::one(field_));
    }
    RrefResult red = aug.rref();
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i >= red.pivots.size() || red.pivots[i] != i) return std::nullopt;
    }
    Matrix inv(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) inv.set(r, c, red.reduced.at(r, cols_ + c));
    }
    return inv;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    require_compatible(rhs, "solve across fields");
    if (rhs.rows_ != rows_) throw DimensionMismatchError("solve: rhs row count");
    Matrix aug(field_, rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.set(r, c, at(r, c));
        for (std::size_t c = 0; c < rhs.cols_; ++c) aug.set(r, cols_ + c, rhs.at(r, c));
    }
    RrefResult red = aug.rref();
    for (std::size_t p : red.pivots) {
        if (p >= cols_) return std::nullopt;  // pivot in the rhs block: inconsistent
    }
    Matrix x(field_, cols_, rhs.cols_);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
            x.set(red.pivots[i], c, red.reduced.at(i, cols_ + c));
        }
    }
    return x;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    a.require_compatible(b, "vstack across fields");
    if (a.cols_ != b.cols_) throw DimensionMismatchError("vstack column count");
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c));
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) m.set(a.rows_ + r, c, b.at(r, c));
    return m;
}

Matrix Matrix::vectorize() const {
    Matrix v(field_, 1, rows_ * cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) v.set(0, i, entries_[i]);
    return v;
}

Matrix Matrix::unvectorize(const Matrix& row, std::size_t rows, std::size_t cols) {
    if (row.rows() != 1 || row.cols() != rows * cols) {
        throw DimensionMismatchError("unvectorize shape");
    }
    Matrix m(row.field(), rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m.set(i / cols, i % cols, row.at(0, i));
    return m;
}

int Matrix::cmp(const Matrix& rhs) const {
    require_compatible(rhs, "compare across fields");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatchError("compare shape");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        int c = entries_[i].cmp(rhs.entries_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::size_t Matrix::hash() const noexcept {
    std::size_t h = rows_ * 1315423911u + cols_;
    for (const auto& e : entries_) {
        h ^= e.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " [");
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) os << ", ";
            os << at(r, c).str();
        }
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

Matrix row_vector(const FieldSpec& field, const std::vector<Scalar>& entries) {
    Matrix m(field, 1, entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(0, i, entries[i]);
    return m;
}

}  // namespace sll

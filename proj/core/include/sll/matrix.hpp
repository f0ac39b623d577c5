#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sll/field.hpp"

namespace sll {

/// Dense matrix over one field, row-major. All operations are pure and
/// validate field/shape compatibility.
class Matrix {
public:
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& field, std::size_t n);
    static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows,
                            std::size_t cols);
    /// Convenience for tests and fixtures: integer entries.
    static Matrix from_ints(const FieldSpec& field,
                            std::initializer_list<std::initializer_list<long long>> rows);
    /// Convenience: entries given as "a" / "a/b" literals.
    static Matrix from_strings(const FieldSpec& field,
                               std::initializer_list<std::initializer_list<const char*>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& field() const noexcept { return field_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar value);

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// a*b - b*a.
    friend Matrix bracket(const Matrix& a, const Matrix& b);

    Matrix pow(std::size_t k) const;  // requires square

    struct RrefResult;
    /// Unique reduced row echelon form; row space preserved.
    RrefResult rref() const;
    std::size_t rank() const;

    /// RREF basis of {x : m x = 0}, one row per basis vector.
    Matrix kernel() const;
    /// RREF basis of the column space, as coordinate row vectors.
    Matrix image() const;
    /// kernel(m^k); k = 0 gives the empty basis. Requires square.
    Matrix matpow_kernel(std::size_t k) const;

    std::optional<Matrix> inverse() const;

    /// Exact solution X of (*this) X = rhs with free variables set to zero;
    /// nullopt when the system is inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    /// Stack rows of b below rows of a (same field and column count).
    friend Matrix vstack(const Matrix& a, const Matrix& b);

    /// Row-major 1 x (rows*cols) flattening, for span computations on
    /// spaces of matrices.
    Matrix vectorize() const;
    static Matrix unvectorize(const Matrix& row, std::size_t rows, std::size_t cols);

    /// Stable total order entry by entry (same shape and field required).
    int cmp(const Matrix& rhs) const;
    std::size_t hash() const noexcept;

    std::string str() const;

private:
    void require_compatible(const Matrix& other, const char* what) const;

    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

struct Matrix::RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Row vector helper: 1 x n matrix.
Matrix row_vector(const FieldSpec& field, const std::vector<Scalar>& entries);

}  // namespace sll

#pragma once

#include <span>
#include <string>
#include <vector>

#include "sll/matrix.hpp"

namespace sll {

/// A subspace of K^n held by its reduced-row-echelon basis (rows = basis
/// vectors, no zero rows). RREF is the single canonical form: two subspaces
/// are equal exactly when their basis matrices are identical, which makes
/// set-level deduplication and hashing exact.
class Subspace {
public:
    /// Canonicalize the row space of `rows` (zero rows are dropped).
    static Subspace from_rows(const Matrix& rows);
    static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
    static Subspace full(const FieldSpec& field, std::size_t ambient_dim);
    /// Span of the given row vector.
    static Subspace line(const Matrix& row);

    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const FieldSpec& field() const noexcept { return basis_.field(); }
    /// dim x ambient_dim matrix in RREF with full row rank.
    const Matrix& basis() const noexcept { return basis_; }

    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_dim(); }

    /// Membership of a row vector.
    bool contains(const Matrix& row_vec) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of a member row vector with respect to the RREF basis.
    /// The vector must lie in the subspace.
    Matrix coordinates_of(const Matrix& row_vec) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// Canonical order: by dimension, then lexicographic on the RREF entries.
    friend int compare(const Subspace& a, const Subspace& b);

    std::size_t hash() const noexcept { return basis_.hash(); }
    std::string str() const;

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

/// Smallest subspace containing both operands.
Subspace sum(const Subspace& a, const Subspace& b);

/// Largest subspace contained in both, computed through annihilators:
/// a ∩ b = (a' + b')'.
Subspace intersect(const Subspace& a, const Subspace& b);

/// True exactly when the parts' dimensions add up to the ambient dimension
/// and their sum is the full space. Throws on an empty list.
bool is_direct_sum(std::span<const Subspace> parts);

/// Directness without the spanning requirement: dim(sum) equals the sum of
/// dimensions.
bool is_independent(std::span<const Subspace> parts);

/// v is homogeneous with respect to e1 + e2 when
/// v ∩ (e1+e2) = (v ∩ e1) + (v ∩ e2).
bool homogeneous(const Subspace& v, const Subspace& e1, const Subspace& e2);

/// v is co-homogeneous with respect to e1 ∩ e2 when
/// v + (e1 ∩ e2) = (v + e1) ∩ (v + e2).
bool cohomogeneous(const Subspace& v, const Subspace& e1, const Subspace& e2);

/// Annihilator {u in the dual | u(v) = 0}, in dual-basis coordinates;
/// computed as the kernel of the basis matrix.
Subspace annihilator(const Subspace& v);

/// Image of v under the linear map m (columns of m act on column vectors).
Subspace apply(const Matrix& m, const Subspace& v);

/// Preimage {x : m x ∈ v}.
Subspace preimage(const Matrix& m, const Subspace& v);

/// Projector matrix onto `onto` along `along`; requires the two to be
/// complementary in the ambient space.
Matrix projector_onto(const Subspace& onto, const Subspace& along);

/// Coordinate system for the quotient u / w (requires w ⊆ u):
/// - `section` (q x n): rows span a complement of w inside u, taken from the
///   RREF rows of u at pivots not used by w;
/// - `project` (q x n): maps any x ∈ u to the coordinates of x + w with
///   respect to the section rows, and annihilates w.
/// project * transpose(section) is the q x q identity.
struct QuotientCoords {
    Matrix section;
    Matrix project;
};
QuotientCoords quotient_coords(const Subspace& u, const Subspace& w);

}  // namespace sll

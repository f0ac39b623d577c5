#include "sll/subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "sll/errors.hpp"

namespace sll {

Subspace Subspace::from_rows(const Matrix& rows) {
    Matrix::RrefResult r = rows.rref();
    Matrix basis(rows.field(), r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t c = 0; c < rows.cols(); ++c) basis.set(i, c, r.reduced.at(i, c));
    }
    return Subspace(std::move(basis));
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim) {
    return Subspace(Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
    return Subspace(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::line(const Matrix& row) {
    if (row.rows() != 1) throw DimensionMismatchError("line expects a single row vector");
    return from_rows(row);
}

bool Subspace::contains(const Matrix& row_vec) const {
    if (row_vec.rows() != 1 || row_vec.cols() != ambient_dim()) {
        throw DimensionMismatchError("membership test vector shape");
    }
    if (row_vec.field() != field()) throw FieldMismatchError("membership test field");
    // Reduce against the RREF rows; zero remainder means membership.
    Matrix v = row_vec;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ambient_dim() && row < dim(); ++col) {
        if (basis_.at(row, col).is_zero()) continue;  // left of this row's pivot
        const Scalar coeff = v.at(0, col);
        if (!coeff.is_zero()) {
            for (std::size_t c = col; c < ambient_dim(); ++c) {
                v.set(0, c, v.at(0, c) - coeff * basis_.at(row, c));
            }
        }
        ++row;
    }
    return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw DimensionMismatchError("containment ambient");
    if (other.field() != field()) throw FieldMismatchError("containment field");
    if (other.dim() > dim()) return false;
    for (std::size_t r = 0; r < other.dim(); ++r) {
        Matrix row(field(), 1, ambient_dim());
        for (std::size_t c = 0; c < ambient_dim(); ++c) row.set(0, c, other.basis_.at(r, c));
        if (!contains(row)) return false;
    }
    return true;
}

Matrix Subspace::coordinates_of(const Matrix& row_vec) const {
    auto sol = basis_.transpose().solve(row_vec.transpose());
    if (!sol) throw std::invalid_argument("vector is not a member of the subspace");
    return sol->transpose();
}

int compare(const Subspace& a, const Subspace& b) {
    if (a.field() != b.field()) throw FieldMismatchError("subspace compare field");
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatchError("subspace compare ambient");
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    return a.basis_.cmp(b.basis_);
}

std::string Subspace::str() const {
    if (is_zero()) return "{0}";
    return basis_.str();
}

namespace {

void require_same_space(const Subspace& a, const Subspace& b, const char* what) {
    if (a.field() != b.field()) throw FieldMismatchError(what);
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatchError(what);
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_space(a, b, "subspace sum");
    return Subspace::from_rows(vstack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& v) {
    return Subspace::from_rows(v.basis().kernel());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_space(a, b, "subspace intersection");
    return annihilator(sum(annihilator(a), annihilator(b)));
}

bool is_direct_sum(std::span<const Subspace> parts) {
    if (parts.empty()) throw std::invalid_argument("is_direct_sum: empty part list");
    std::size_t total = 0;
    Subspace acc = Subspace::zero(parts.front().field(), parts.front().ambient_dim());
    for (const Subspace& p : parts) {
        require_same_space(acc, p, "is_direct_sum");
        total += p.dim();
        acc = sum(acc, p);
    }
    return total == acc.dim() && acc.is_full();
}

bool is_independent(std::span<const Subspace> parts) {
    if (parts.empty()) return true;
    std::size_t total = 0;
    Subspace acc = Subspace::zero(parts.front().field(), parts.front().ambient_dim());
    for (const Subspace& p : parts) {
        require_same_space(acc, p, "is_independent");
        total += p.dim();
        acc = sum(acc, p);
    }
    return total == acc.dim();
}

bool homogeneous(const Subspace& v, const Subspace& e1, const Subspace& e2) {
    require_same_space(v, e1, "homogeneous");
    require_same_space(v, e2, "homogeneous");
    return intersect(v, sum(e1, e2)) == sum(intersect(v, e1), intersect(v, e2));
}

bool cohomogeneous(const Subspace& v, const Subspace& e1, const Subspace& e2) {
    require_same_space(v, e1, "cohomogeneous");
    require_same_space(v, e2, "cohomogeneous");
    return sum(v, intersect(e1, e2)) == intersect(sum(v, e1), sum(v, e2));
}

Subspace apply(const Matrix& m, const Subspace& v) {
    if (m.field() != v.field()) throw FieldMismatchError("apply field");
    if (m.cols() != v.ambient_dim()) throw DimensionMismatchError("apply shape");
    return Subspace::from_rows((m * v.basis().transpose()).transpose());
}

Subspace preimage(const Matrix& m, const Subspace& v) {
    if (m.field() != v.field()) throw FieldMismatchError("preimage field");
    if (m.rows() != v.ambient_dim()) throw DimensionMismatchError("preimage shape");
    // x with m x ∈ v  <=>  ann(v) · m · x = 0.
    return Subspace::from_rows((annihilator(v).basis() * m).kernel());
}

Matrix projector_onto(const Subspace& onto, const Subspace& along) {
    require_same_space(onto, along, "projector");
    const std::size_t n = onto.ambient_dim();
    if (onto.dim() + along.dim() != n || !sum(onto, along).is_full()) {
        throw NotComplementaryError("projector");
    }
    // Columns of B are the basis of `onto` then `along`; P = B diag(I,0) B^-1.
    Matrix b = vstack(onto.basis(), along.basis()).transpose();
    Matrix binv = *b.inverse();
    Matrix d(onto.field(), n, n);
    for (std::size_t i = 0; i < onto.dim(); ++i) d.set(i, i, Scalar::one(onto.field()));
    return b * d * binv;
}

QuotientCoords quotient_coords(const Subspace& u, const Subspace& w) {
    require_same_space(u, w, "quotient");
    if (!u.contains(w)) throw NotContainedError("quotient: w is not contained in u");

    const FieldSpec field = u.field();
    const std::size_t n = u.ambient_dim();
    const std::size_t q = u.dim() - w.dim();

    auto pivots_of = [](const Matrix& rref_basis) {
        std::vector<std::size_t> pivots;
        for (std::size_t r = 0; r < rref_basis.rows(); ++r) {
            for (std::size_t c = 0; c < rref_basis.cols(); ++c) {
                if (!rref_basis.at(r, c).is_zero()) {
                    pivots.push_back(c);
                    break;
                }
            }
        }
        return pivots;
    };
    std::vector<std::size_t> up = pivots_of(u.basis());
    std::vector<std::size_t> wp = pivots_of(w.basis());

    // Rows of u's RREF basis whose pivot is not a pivot of w span a
    // complement of w in u (pivots of w are a subset of pivots of u).
    Matrix section(field, q, n);
    std::size_t out_row = 0;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        if (std::find(wp.begin(), wp.end(), up[r]) != wp.end()) continue;
        for (std::size_t c = 0; c < n; ++c) section.set(out_row, c, u.basis().at(r, c));
        ++out_row;
    }
    if (out_row != q) throw std::logic_error("quotient: pivot bookkeeping failed");

    // project solves  [w; section] · projectᵀ = [0; I].
    Matrix stacked = vstack(w.basis(), section);
    Matrix rhs(field, stacked.rows(), q);
    for (std::size_t i = 0; i < q; ++i) rhs.set(w.dim() + i, i, Scalar::one(field));
    auto sol = stacked.solve(rhs);
    if (!sol) throw std::logic_error("quotient: projection system inconsistent");
    return {std::move(section), sol->transpose()};
}

}  // namespace sll

#include "sll/lie_algebra.hpp"

#include "sll/errors.hpp"

namespace sll {

MatrixLieAlgebra MatrixLieAlgebra::zero(const FieldSpec& field, std::size_t ambient_dim) {
    MatrixLieAlgebra alg(field, ambient_dim);
    alg.span_ = Subspace::zero(field, ambient_dim * ambient_dim);
    return alg;
}

bool MatrixLieAlgebra::contains(const Matrix& m) const {
    if (m.field() != field_) throw FieldMismatchError("algebra membership field");
    if (m.rows() != ambient_dim_ || m.cols() != ambient_dim_) {
        throw DimensionMismatchError("algebra membership shape");
    }
    return span_.contains(m.vectorize());
}

MatrixLieAlgebra lie_closure(const FieldSpec& field, std::size_t ambient_dim,
                             std::vector<Matrix> generators) {
    for (const Matrix& g : generators) {
        if (g.field() != field) throw FieldMismatchError("generator field");
        if (g.rows() != ambient_dim || g.cols() != ambient_dim) {
            throw DimensionMismatchError("generator shape");
        }
    }

    MatrixLieAlgebra alg = MatrixLieAlgebra::zero(field, ambient_dim);
    alg.generators_ = generators;

    Matrix rows(field, 0, ambient_dim * ambient_dim);
    for (const Matrix& g : generators) rows = vstack(rows, g.vectorize());
    Subspace span = Subspace::from_rows(rows);

    // Bracket-and-span to a fixed point; each round either grows the
    // dimension (bounded by n^2) or stops.
    for (;;) {
        std::vector<Matrix> basis;
        basis.reserve(span.dim());
        for (std::size_t r = 0; r < span.dim(); ++r) {
            Matrix row(field, 1, span.ambient_dim());
            for (std::size_t c = 0; c < span.ambient_dim(); ++c) row.set(0, c, span.basis().at(r, c));
            basis.push_back(Matrix::unvectorize(row, ambient_dim, ambient_dim));
        }
        Matrix new_rows = span.basis();
        bool grew = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                Matrix br = bracket(basis[i], basis[j]);
                if (!span.contains(br.vectorize())) {
                    new_rows = vstack(new_rows, br.vectorize());
                    grew = true;
                }
            }
        }
        if (!grew) {
            alg.span_ = span;
            alg.basis_ = std::move(basis);
            return alg;
        }
        span = Subspace::from_rows(new_rows);
    }
}

bool leaves_invariant(const MatrixLieAlgebra& alg, const Subspace& v) {
    if (v.field() != alg.field()) throw FieldMismatchError("invariance field");
    if (v.ambient_dim() != alg.ambient_dim()) throw DimensionMismatchError("invariance ambient");
    for (const Matrix& b : alg.basis()) {
        if (!v.contains(apply(b, v))) return false;
    }
    return true;
}

bool commutes_with_algebra(const Matrix& m, const MatrixLieAlgebra& alg) {
    if (m.field() != alg.field()) throw FieldMismatchError("commutation field");
    if (m.rows() != alg.ambient_dim() || m.cols() != alg.ambient_dim()) {
        throw DimensionMismatchError("commutation shape");
    }
    for (const Matrix& b : alg.basis()) {
        if (!(m * b == b * m)) return false;
    }
    return true;
}

namespace {

/// Solve a homogeneous linear system on the entries of an n x n matrix A.
/// Each constraint row is a linear functional on vec(A).
MatrixLieAlgebra algebra_from_constraints(const FieldSpec& field, std::size_t n,
                                          const Matrix& constraints) {
    Matrix basis_rows = constraints.kernel();
    std::vector<Matrix> gens;
    gens.reserve(basis_rows.rows());
    for (std::size_t r = 0; r < basis_rows.rows(); ++r) {
        Matrix row(field, 1, n * n);
        for (std::size_t c = 0; c < n * n; ++c) row.set(0, c, basis_rows.at(r, c));
        gens.push_back(Matrix::unvectorize(row, n, n));
    }
    return lie_closure(field, n, std::move(gens));
}

}  // namespace

MatrixLieAlgebra stabilizer_algebra(const FieldSpec& field, std::size_t ambient_dim,
                                    std::span<const Subspace> parts) {
    const std::size_t n = ambient_dim;
    std::size_t constraint_count = 0;
    for (const Subspace& s : parts) constraint_count += s.dim() * (n - s.dim());

    Matrix constraints(field, constraint_count, n * n);
    std::size_t row = 0;
    for (const Subspace& s : parts) {
        if (s.field() != field || s.ambient_dim() != n) {
            throw DimensionMismatchError("stabilizer part ambient mismatch");
        }
        Subspace ann = annihilator(s);
        // For each basis vector b of s and each annihilator functional u:
        // sum_{k,l} u_l A_{l,k} b_k = 0.
        for (std::size_t bi = 0; bi < s.dim(); ++bi) {
            for (std::size_t ui = 0; ui < ann.dim(); ++ui) {
                for (std::size_t l = 0; l < n; ++l) {
                    for (std::size_t k = 0; k < n; ++k) {
                        constraints.set(row, l * n + k,
                                        ann.basis().at(ui, l) * s.basis().at(bi, k));
                    }
                }
                ++row;
            }
        }
    }
    return algebra_from_constraints(field, n, constraints);
}

MatrixLieAlgebra skew_stabilizer_algebra(const BilinearForm& form,
                                         std::span<const Subspace> parts) {
    const FieldSpec field = form.field();
    const std::size_t n = form.ambient_dim();

    std::size_t invariance_rows = 0;
    for (const Subspace& s : parts) invariance_rows += s.dim() * (n - s.dim());

    // Skew condition Aᵀ G + G A = 0 contributes n^2 rows:
    // sum_t A_{t,r} G_{t,s} + G_{r,t} A_{t,s} = 0 for all (r, s).
    Matrix constraints(field, invariance_rows + n * n, n * n);
    std::size_t row = 0;
    for (const Subspace& s : parts) {
        Subspace ann = annihilator(s);
        for (std::size_t bi = 0; bi < s.dim(); ++bi) {
            for (std::size_t ui = 0; ui < ann.dim(); ++ui) {
                for (std::size_t l = 0; l < n; ++l) {
                    for (std::size_t k = 0; k < n; ++k) {
                        constraints.set(row, l * n + k,
                                        ann.basis().at(ui, l) * s.basis().at(bi, k));
                    }
                }
                ++row;
            }
        }
    }
    const Matrix& g = form.gram();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t t = 0; t < n; ++t) {
                Scalar c1 = g.at(t, s);  // coefficient of A_{t,r}
                Scalar c2 = g.at(r, t);  // coefficient of A_{t,s}
                Scalar existing = constraints.at(row, t * n + r);
                constraints.set(row, t * n + r, existing + c1);
                existing = constraints.at(row, t * n + s);
                constraints.set(row, t * n + s, existing + c2);
            }
            ++row;
        }
    }
    return algebra_from_constraints(field, n, constraints);
}

}  // namespace sll

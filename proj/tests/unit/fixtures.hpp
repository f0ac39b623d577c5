#pragma once

#include "sll/two_sum.hpp"

namespace sll::testing {

/// Two coordinate lines paired with themselves: V1 = W1 = <e1>, V2 = W2 = <e2>.
/// Commutator vanishes; everything sits in the e-indexed summand.
inline TwoSumDecomposition aligned_fixture(const FieldSpec& field = FieldSpec::rationals()) {
    Subspace e1 = Subspace::from_rows(Matrix::from_ints(field, {{1, 0}}));
    Subspace e2 = Subspace::from_rows(Matrix::from_ints(field, {{0, 1}}));
    return TwoSumDecomposition::make(e1, e2, e1, e2);
}

/// V1 = <e1>, V2 = <e2>, W1 = <e2>, W2 = <e1>: the tau-indexed twin of the
/// aligned fixture.
inline TwoSumDecomposition swapped_fixture(const FieldSpec& field = FieldSpec::rationals()) {
    Subspace e1 = Subspace::from_rows(Matrix::from_ints(field, {{1, 0}}));
    Subspace e2 = Subspace::from_rows(Matrix::from_ints(field, {{0, 1}}));
    return TwoSumDecomposition::make(e1, e2, e2, e1);
}

/// Four pairwise independent lines in the plane:
/// V1 = <e1>, V2 = <e2>, W1 = <e1+e2>, W2 = <e1-e2>. The commutator is
/// invertible (its square is -1/4 of the identity).
inline TwoSumDecomposition crossed_fixture(const FieldSpec& field = FieldSpec::rationals()) {
    Subspace v1 = Subspace::from_rows(Matrix::from_ints(field, {{1, 0}}));
    Subspace v2 = Subspace::from_rows(Matrix::from_ints(field, {{0, 1}}));
    Subspace w1 = Subspace::from_rows(Matrix::from_ints(field, {{1, 1}}));
    Subspace w2 = Subspace::from_rows(Matrix::from_ints(field, {{1, -1}}));
    return TwoSumDecomposition::make(v1, v2, w1, w2);
}

}  // namespace sll::testing

#pragma once

#include <span>
#include <vector>

#include "sll/bilinear_form.hpp"
#include "sll/matrix.hpp"
#include "sll/subspace.hpp"

namespace sll {

/// A linear span of n x n matrices that is closed under the commutator
/// bracket. The basis is canonical: it is the RREF of the vectorized span, so
/// equal algebras have equal bases.
class MatrixLieAlgebra {
public:
    static MatrixLieAlgebra zero(const FieldSpec& field, std::size_t ambient_dim);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Matrix>& basis() const noexcept { return basis_; }
    const std::vector<Matrix>& generators() const noexcept { return generators_; }

    /// Membership in the linear span of the basis.
    bool contains(const Matrix& m) const;

    friend MatrixLieAlgebra lie_closure(const FieldSpec& field, std::size_t ambient_dim,
                                        std::vector<Matrix> generators);

private:
    MatrixLieAlgebra(FieldSpec field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}

    FieldSpec field_;
    std::size_t ambient_dim_;
    std::vector<Matrix> basis_;
    std::vector<Matrix> generators_;
    Subspace span_ = Subspace::zero(FieldSpec::rationals(), 0);  // vectorized span
};

/// Smallest bracket-closed linear span containing the generators. Iterates
/// bracket-and-span to a fixed point; the dimension is bounded by n², which
/// bounds the number of rounds.
MatrixLieAlgebra lie_closure(const FieldSpec& field, std::size_t ambient_dim,
                             std::vector<Matrix> generators);

/// True when every basis element maps v into itself.
bool leaves_invariant(const MatrixLieAlgebra& alg, const Subspace& v);

/// True when m commutes with every basis element.
bool commutes_with_algebra(const Matrix& m, const MatrixLieAlgebra& alg);

/// All endomorphisms leaving each of the given subspaces invariant, obtained
/// by solving the linear constraint system ann(S) · A · basis(S)ᵀ = 0. The
/// result is closed under the bracket (it is an associative algebra).
MatrixLieAlgebra stabilizer_algebra(const FieldSpec& field, std::size_t ambient_dim,
                                    std::span<const Subspace> parts);

/// As stabilizer_algebra, with the extra linear condition that each element
/// is skew for the form: <a x, y> + <x, a y> = 0.
MatrixLieAlgebra skew_stabilizer_algebra(const BilinearForm& form,
                                         std::span<const Subspace> parts);

}  // namespace sll

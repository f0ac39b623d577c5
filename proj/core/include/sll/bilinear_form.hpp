#pragma once

#include <optional>
#include <utility>

#include "sll/matrix.hpp"
#include "sll/report.hpp"
#include "sll/subspace.hpp"
#include "sll/two_sum.hpp"

namespace sll {

/// A nondegenerate symmetric or antisymmetric bilinear form, held by its Gram
/// matrix. Degenerate Gram matrices are rejected at construction, as are
/// antisymmetric forms in odd ambient dimension (they cannot be
/// nondegenerate).
class BilinearForm {
public:
    enum class Kind { symmetric, antisymmetric };
    enum class Isotropy { totally_isotropic, nondegenerate, degenerate };

    static BilinearForm make(Kind kind, Matrix gram);
    /// diag(1, ..., 1).
    static BilinearForm identity_form(const FieldSpec& field, std::size_t n);
    /// Symmetric form with 1 on the antidiagonal: n/2 hyperbolic pairs when n
    /// is even, one anisotropic middle line when n is odd.
    static BilinearForm hyperbolic(const FieldSpec& field, std::size_t n);
    /// The standard symplectic form (n even).
    static BilinearForm symplectic(const FieldSpec& field, std::size_t n);

    Kind kind() const noexcept { return kind_; }
    const Matrix& gram() const noexcept { return gram_; }
    const FieldSpec& field() const noexcept { return gram_.field(); }
    std::size_t ambient_dim() const noexcept { return gram_.rows(); }

    /// <x, y> for row vectors.
    Scalar pairing(const Matrix& x, const Matrix& y) const;

    /// {x : <x, v> = 0 for all v in the subspace}.
    Subspace perp(const Subspace& v) const;

    /// Unique m* with <m x, y> = <x, m* y>; equals gram^-1 mᵀ gram.
    Matrix adjoint(const Matrix& m) const;

    /// True when <a x, y> + <x, a y> = 0 for all x, y.
    bool is_skew(const Matrix& a) const;
    /// True when <m x, m y> = <x, y> for all x, y.
    bool is_isometry(const Matrix& m) const;

    /// v ⊆ v-perp: totally isotropic; v ∩ v-perp ≠ 0: degenerate; else
    /// nondegenerate. The zero subspace counts as nondegenerate.
    Isotropy isotropy(const Subspace& v) const;
    bool orthogonal(const Subspace& a, const Subspace& b) const;

private:
    BilinearForm(Kind kind, Matrix gram, Matrix gram_inv)
        : kind_(kind), gram_(std::move(gram)), gram_inv_(std::move(gram_inv)) {}

    Kind kind_;
    Matrix gram_;
    Matrix gram_inv_;
};

const char* to_string(BilinearForm::Kind k);
const char* to_string(BilinearForm::Isotropy i);

/// The decomposition (E, V1, V2, V1-perp, V2-perp). When v2 is not supplied
/// it defaults to perp(v1), which requires v1 to be nondegenerate for the
/// form. Throws NotComplementaryError when the chosen pair does not split E.
std::pair<TwoSumDecomposition, Subspace> reflexive_decomposition(
    const BilinearForm& form, const Subspace& v1, std::optional<Subspace> v2 = std::nullopt);

/// l is an involution (l² = I) that is anti-self-adjoint for the form.
bool para_kahler_check(const BilinearForm& form, const Matrix& l);

/// True when the decomposition was built with W_i = V_i-perp.
bool is_reflexive_type(const BilinearForm& form, const TwoSumDecomposition& dec);

/// Orthogonality structure of the canonical split for reflexive
/// decompositions: the three summands are pairwise orthogonal and each
/// sigma-chain is the perp of its dual chain, level by level.
TheoremReport verify_orthogonal_split(const BilinearForm& form, const TwoSumDecomposition& dec);

}  // namespace sll

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sll/bilinear_form.hpp"
#include "sll/lie_algebra.hpp"
#include "sll/matrix.hpp"
#include "sll/report.hpp"
#include "sll/representation.hpp"
#include "sll/subspace.hpp"
#include "sll/two_sum.hpp"

namespace sll {

/// A formal curvature tensor: coefficients c[i][j][k][l] with
/// R(e_i, e_j) e_k = sum_l c[i][j][k][l] e_l, antisymmetric in (i, j) and
/// satisfying the cyclic first Bianchi identity
/// R(x,y)z + R(y,z)x + R(z,x)y = 0. Both invariants are enforced at
/// construction.
class CurvatureTensor {
public:
    static CurvatureTensor from_coeffs(const FieldSpec& field, std::size_t dim,
                                       std::vector<Scalar> coeffs);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return coeffs_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }

    /// The endomorphism z ↦ R(x, y) z for row vectors x, y; bilinear and
    /// antisymmetric in (x, y).
    Matrix evaluate(const Matrix& x, const Matrix& y) const;
    /// R(e_i, e_j) as a matrix acting on column vectors.
    Matrix evaluate_basis(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }

private:
    CurvatureTensor(FieldSpec field, std::size_t dim, std::vector<Scalar> coeffs)
        : field_(field), dim_(dim), coeffs_(std::move(coeffs)) {}

    FieldSpec field_;
    std::size_t dim_;
    std::vector<Scalar> coeffs_;
};

/// Antisymmetry of a raw coefficient array in the first two slots.
bool antisymmetry_check(const FieldSpec& field, std::size_t dim, std::span<const Scalar> coeffs);

/// First Bianchi identity on all basis triples (sufficient by
/// multilinearity). Throws PreconditionError when antisymmetry fails.
bool bianchi_check(const FieldSpec& field, std::size_t dim, std::span<const Scalar> coeffs);

/// The Lie algebra generated by all values R(e_i, e_j) of the given tensors.
MatrixLieAlgebra berger_algebra(const FieldSpec& field, std::size_t dim,
                                std::span<const CurvatureTensor> tensors);

/// True when every value R(e_i, e_j) lies in the span of the algebra.
bool matches(const CurvatureTensor& r, const MatrixLieAlgebra& alg);

/// Basis of the linear space of curvature tensors satisfying, in addition to
/// antisymmetry and Bianchi: R(x,y) part_k ⊆ part_k for every given part, and
/// skewness <R(x,y)z, t> + <z, R(x,y)t> = 0 when a form is given. Solved as
/// one exact kernel computation; sampling valid tensors by
/// generate-and-reject would essentially never terminate.
std::vector<CurvatureTensor> curvature_solution_space(const FieldSpec& field, std::size_t dim,
                                                      std::span<const Subspace> invariant_parts,
                                                      const BilinearForm* form = nullptr);

/// For parts F_1 ⊕ ... ⊕ F_r = E left invariant by the tensor's values:
/// R(x, y) z = 0 whenever x, y, z come from three distinct parts.
TheoremReport verify_block_vanishing(const CurvatureTensor& r, std::span<const Subspace> parts);

/// True when for every algebra element a and every part, the block
/// restriction of a to the part (extended by zero on the others) stays in
/// the algebra.
bool exterior_product_check(const MatrixLieAlgebra& alg, std::span<const Subspace> parts);

/// <R(x,y)z, t> = <R(z,t)x, y> on all basis quadruples. Requires a symmetric
/// form, Bianchi, and form-skew values.
bool verify_pair_symmetry(const BilinearForm& form, const CurvatureTensor& r);

/// The metric theorem for Berger algebras preserving V1, V2 and a symmetric
/// form (with W_i = perp(V_i)): the algebra generated by the tensors maps E
/// into ker(theta) and kills im(theta); when E is the stable e-summand, the
/// tensors vanish on V1 x V1 and V2 x V2.
TheoremReport verify_metric_theorem(const BilinearForm& form, const TwoSumDecomposition& dec,
                                    std::span<const CurvatureTensor> tensors);

/// Corollary: on a metric indecomposable instance (no proper nonzero
/// invariant subspace that is nondegenerate for the form) with V1 or V2
/// degenerate, theta² = 0. Indecomposability is established by the
/// exhaustive oracle within `bounds`, or asserted by the caller.
TheoremReport verify_theta_square_zero(const BilinearForm& form, const TwoSumDecomposition& dec,
                                       std::span<const CurvatureTensor> tensors,
                                       const OracleBounds& bounds = {},
                                       std::optional<bool> asserted_indecomposable = std::nullopt);

}  // namespace sll

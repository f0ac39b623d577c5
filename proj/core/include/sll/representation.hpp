#pragma once

#include <optional>
#include <vector>

#include "sll/bilinear_form.hpp"
#include "sll/lie_algebra.hpp"
#include "sll/matrix.hpp"
#include "sll/report.hpp"
#include "sll/subspace.hpp"
#include "sll/two_sum.hpp"

namespace sll {

/// The involution with +1-eigenspace v1 and -1-eigenspace v2, i.e. the
/// difference of the two projections of the complementary pair.
Matrix involution_from_split(const Subspace& v1, const Subspace& v2);

/// kernel((m - lambda I)^ambient_dim).
Subspace generalized_eigenspace(const Matrix& m, const Scalar& lambda);

/// Generalized eigenspaces at caller-chosen eigenvalues plus the residual
/// part (the intersection of the images of (m - lambda I)^n over the
/// requested lambdas). No polynomial factorization happens: the theorems only
/// ever need lambda in {-1, 0, 1}.
struct EigenSplit {
    struct Entry {
        Scalar lambda;
        Subspace space;
        std::size_t multiplicity;
    };
    std::vector<Entry> entries;
    Subspace residual;
};
EigenSplit eigen_split(const Matrix& m, const std::vector<Scalar>& lambdas);

/// Splitting of the nilpotent summands by the generalized eigenspaces of
/// L = p1 - q2 and L' = p1 - q1:
///   f_e = E_(L,-1) ⊕ E_(L,1) with V1∩W1 ⊆ E_(L,1) and V2∩W2 ⊆ E_(L,-1);
///   f_tau = E_(L',-1) ⊕ E_(L',1) with V1∩W2 ⊆ E_(L',1), V2∩W1 ⊆ E_(L',-1).
/// With a form (requires W_i = perp(V_i)): L is anti-self-adjoint, its ±1
/// generalized eigenspaces are totally isotropic with nondegenerate sum; L'
/// is self-adjoint with nondegenerate, mutually orthogonal ±1 spaces.
TheoremReport verify_eigenspace_split(const TwoSumDecomposition& dec,
                                      const BilinearForm* form = nullptr);

/// Isotropic splitting E = E_(L,1) ⊕ E_(L,-1) for L = p - p* built from a
/// complementary invariant pair of a reflexive representation. Applies only
/// when the whole space is the stable e-summand; otherwise every clause is
/// marked inapplicable.
TheoremReport verify_isotropic_split(const BilinearForm& form, const Subspace& v1,
                                     const Subspace& v2,
                                     const MatrixLieAlgebra* alg = nullptr);

/// The pairing matrix M[i][j] = <b_i, c_j> for bases (b_i) of e2 and (c_j)
/// of e1; invertible exactly when e2 ∩ perp(e1) = 0, in which case
/// v ↦ <v, ·> identifies e2 with the dual of e1.
struct DualPairing {
    Matrix pairing;
    bool invertible;
};
DualPairing dual_identification(const BilinearForm& form, const Subspace& e1, const Subspace& e2);

/// For E = f1 ⊕ f2 = f2 ⊕ f3 = f1 ⊕ f3 with all three invariant under alg:
/// the restriction to f3 of the projection onto f1 along f2, expressed in the
/// bases of f3 and f1. It is an invertible intertwiner, which exhibits
/// f1 ⊕ f3 as two copies of the same representation. Returns nullopt if the
/// computed map fails to be invertible or to commute (does not happen for
/// valid input).
std::optional<Matrix> k2_factor(const Subspace& f1, const Subspace& f2, const Subspace& f3,
                                const MatrixLieAlgebra& alg);

/// The four-clause structure report for a reflexive decomposition with an
/// algebra leaving V1, V2 invariant:
///  (i)   E = f_e ⊥ f_tau ⊥ ftilde,
///  (ii)  f_e = f_e⁺ ⊕ f_e⁻ with both totally isotropic and dually paired,
///  (iii) f_tau = f_tau⁺ ⊥ f_tau⁻ with both nondegenerate,
///  (iv)  ftilde = (ftilde ∩ V1) ⊗ K², exhibited by an invertible
///        intertwiner commuting with the algebra.
TheoremReport verify_structure_theorem(const BilinearForm& form, const TwoSumDecomposition& dec,
                                       const MatrixLieAlgebra& alg);

/// Exhaustive weak-irreducibility decision on small finite fields.
struct OracleBounds {
    std::size_t max_dim = 4;
    std::uint32_t max_p = 3;
};
struct IrreducibilityVerdict {
    enum class Kind { yes, no, infeasible };
    Kind kind;
    /// For `no`: the first (in canonical subspace order) proper nonzero
    /// invariant subspace that is nondegenerate for the form.
    std::optional<Subspace> witness;
};
IrreducibilityVerdict weakly_irreducible_oracle(const BilinearForm& form,
                                                const MatrixLieAlgebra& alg,
                                                const OracleBounds& bounds = {});

}  // namespace sll

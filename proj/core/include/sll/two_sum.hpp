#pragma once

#include <cstddef>
#include <vector>

#include "sll/matrix.hpp"
#include "sll/report.hpp"
#include "sll/subspace.hpp"

namespace sll {

/// The two elements of the symmetric group on {1,2}, used to index the two
/// ways of pairing each V_i with a W_j.
enum class Sigma { e, tau };

constexpr Sigma other(Sigma s) { return s == Sigma::e ? Sigma::tau : Sigma::e; }
/// sigma applied to i ∈ {1,2}.
constexpr std::size_t sigma_apply(Sigma s, std::size_t i) {
    return s == Sigma::e ? i : 3 - i;
}
const char* to_string(Sigma s);

/// The six fixed-point chains attached to a decomposition, each iterated
/// until two consecutive terms agree (the repeated term is kept, so
/// chain.back() is the stable value). `f` is weakly increasing, `ftilde`
/// weakly decreasing.
struct ChainReport {
    std::vector<Subspace> f, ftilde;
    std::vector<Subspace> f_e, f_tau;
    std::vector<Subspace> ftilde_e, ftilde_tau;

    const Subspace& f_inf() const { return f.back(); }
    const Subspace& ftilde_inf() const { return ftilde.back(); }
    const Subspace& f_sigma_inf(Sigma s) const {
        return s == Sigma::e ? f_e.back() : f_tau.back();
    }
    const Subspace& ftilde_sigma_inf(Sigma s) const {
        return s == Sigma::e ? ftilde_e.back() : ftilde_tau.back();
    }
    const std::vector<Subspace>& f_sigma(Sigma s) const { return s == Sigma::e ? f_e : f_tau; }
    const std::vector<Subspace>& ftilde_sigma(Sigma s) const {
        return s == Sigma::e ? ftilde_e : ftilde_tau;
    }

    /// First n with chain[n] == chain[n+1].
    static std::size_t stabilization_index(const std::vector<Subspace>& chain);
    std::size_t f_stabilization() const { return stabilization_index(f); }
};

/// The canonical three-way split E = f_e ⊕ f_tau ⊕ ftilde: the two summands
/// of the stable kernel chain plus the stable image chain. The commutator is
/// nilpotent on f_e ⊕ f_tau and invertible on ftilde.
struct CanonicalSplit {
    Subspace f_e;
    Subspace f_tau;
    Subspace ftilde;
};

/// A quintuple (E, V1, V2, W1, W2) with V1 ⊕ V2 = W1 ⊕ W2 = E, together with
/// its four projections and the commutator operator
/// theta = q1 p1 - p1 q1 (p_i projects onto V_i along the partner, q_i onto
/// W_i along the partner).
class TwoSumDecomposition {
public:
    enum class Which { p1, p2, q1, q2 };

    /// Validates both direct sums; throws NotComplementaryError("V"/"W").
    static TwoSumDecomposition make(Subspace v1, Subspace v2, Subspace w1, Subspace w2);

    std::size_t ambient_dim() const noexcept { return v1_.ambient_dim(); }
    const FieldSpec& field() const noexcept { return v1_.field(); }
    const Subspace& v1() const noexcept { return v1_; }
    const Subspace& v2() const noexcept { return v2_; }
    const Subspace& w1() const noexcept { return w1_; }
    const Subspace& w2() const noexcept { return w2_; }
    const Subspace& v(std::size_t i) const { return i == 1 ? v1_ : v2_; }
    const Subspace& w(std::size_t j) const { return j == 1 ? w1_ : w2_; }

    const Matrix& projector(Which which) const;
    const Matrix& theta() const noexcept { return theta_; }

    /// The dual quintuple (E*, W1', W2', V1', V2') over dual coordinates;
    /// its commutator equals the transpose of this one's.
    TwoSumDecomposition dual() const;

    /// Conjugated decomposition (g V1, g V2, g W1, g W2) for invertible g.
    TwoSumDecomposition conjugated(const Matrix& g) const;

    /// All six chains, iterated to stabilization.
    ChainReport chains() const;

    CanonicalSplit canonical_split() const;
    CanonicalSplit canonical_split(const ChainReport& chains) const;

    /// Exhaustive check of the chain/commutator identities; failures are
    /// reported as clauses, never thrown.
    TheoremReport verify_chain_identities() const;

private:
    TwoSumDecomposition(Subspace v1, Subspace v2, Subspace w1, Subspace w2, Matrix p1,
                        Matrix p2, Matrix q1, Matrix q2, Matrix theta);

    Subspace v1_, v2_, w1_, w2_;
    Matrix p1_, p2_, q1_, q2_;
    Matrix theta_;
};

}  // namespace sll

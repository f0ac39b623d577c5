#pragma once

#include <cstdint>
#include <vector>

#include "sll/bilinear_form.hpp"
#include "sll/curvature.hpp"
#include "sll/matrix.hpp"
#include "sll/subspace.hpp"
#include "sll/two_sum.hpp"

namespace sll {

/// Deterministic 64-bit generator (splitmix64). Self-contained so that
/// identical seeds produce identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Random entries: uniform residues over GF(p), integers in [-3, 3] over the
/// rationals (bounded entries keep exact arithmetic small).
Matrix random_matrix(Rng& rng, const FieldSpec& field, std::size_t rows, std::size_t cols);
Matrix random_invertible(Rng& rng, const FieldSpec& field, std::size_t n);
Subspace random_subspace(Rng& rng, const FieldSpec& field, std::size_t ambient_dim,
                         std::size_t dim);
/// A subspace complementary to the given one.
Subspace random_complement(Rng& rng, const Subspace& s);
BilinearForm random_symmetric_form(Rng& rng, const FieldSpec& field, std::size_t n);

/// Intended block profile of a generated decomposition: dimensions of the
/// e-type, tau-type and image-type blocks (image dimension is even).
struct TwoSumProfile {
    std::size_t e_dim = 0;
    std::size_t tau_dim = 0;
    std::size_t image_dim = 0;
};

struct GeneratedTwoSum {
    TwoSumDecomposition dec;
    TwoSumProfile profile;
};

/// Random decomposition with a known canonical-split profile: a random block
/// profile is assembled from elementary blocks (aligned or sheared pairs for
/// the nilpotent types, crossed lines for the invertible type) and pushed
/// through a random change of basis. The construction guarantees both direct
/// sums, and the profile predicts the dimensions of the canonical split.
GeneratedTwoSum random_two_sum(Rng& rng, const FieldSpec& field, std::size_t dim);
GeneratedTwoSum random_two_sum_with_profile(Rng& rng, const FieldSpec& field,
                                            const TwoSumProfile& profile);

/// Random reflexive instance: nondegenerate symmetric Gram matrix and a
/// random complemented V1; W_i = perp(V_i).
struct GeneratedReflexive {
    BilinearForm form;
    TwoSumDecomposition dec;
};
GeneratedReflexive random_reflexive(Rng& rng, const FieldSpec& field, std::size_t dim);

/// Random metric curvature instance: reflexive pair plus tensors drawn from
/// the exact solution space of the antisymmetry/cyclic/invariance/skewness
/// constraints. V1 is drawn with a bias towards degenerate subspaces so that
/// the metric corollary is exercised.
struct GeneratedCurvature {
    BilinearForm form;
    TwoSumDecomposition dec;
    std::vector<CurvatureTensor> tensors;
};
GeneratedCurvature random_curvature(Rng& rng, const FieldSpec& field, std::size_t dim,
                                    std::size_t tensor_count);

}  // namespace sll

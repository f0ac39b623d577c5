#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sll/polynomial.hpp"
#include "sll/report.hpp"
#include "sll/subspace.hpp"
#include "sll/two_sum.hpp"

namespace sll {

/// A finite set of subspaces closed under pairwise sum and intersection
/// (unless `truncated`), in canonical order (dimension, then lexicographic on
/// RREF entries), together with its Hasse diagram.
struct SubspaceLattice {
    std::vector<Subspace> elements;
    /// (lower, upper) index pairs of the covering relation, no transitive
    /// edges.
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
    /// Indices of the seed elements.
    std::vector<std::size_t> generators;
    bool truncated = false;

    std::size_t size() const noexcept { return elements.size(); }
    bool contains(const Subspace& s) const;
    std::size_t index_of(const Subspace& s) const;  // size() when absent
};

inline constexpr std::size_t kDefaultLatticeCap = 10000;

/// Fixed point of repeatedly adding pairwise sums and intersections of the
/// seeds. Stops early with `truncated = true` instead of exceeding
/// max_elements. Deduplication is exact thanks to the RREF canonical form.
SubspaceLattice closure(std::vector<Subspace> seeds, std::size_t max_elements = kDefaultLatticeCap);

/// Every element V of a (complete) lattice splits along the canonical
/// decomposition: V = (V ∩ f_e) ⊕ (V ∩ f_tau) ⊕ (V ∩ ftilde).
/// Throws TruncatedLatticeError on truncated input.
TheoremReport verify_lattice_homogeneity(const SubspaceLattice& lat, const CanonicalSplit& split);

/// The conjugacy-class invariant of a decomposition satisfying all four
/// pairwise direct sums E = V1+V2 = W1+W2 = V1+W2 = W1+V2.
/// In the quotient interval [V1 ∩ W1, V1 + W1] the images T'1 of
/// T1 = (V1∩W1) + (V2∩(V1+W1)) and U'1 of U1 = (V1∩W1) + (W2∩(V1+W1)) are
/// both complements of V'1 and of W'1; i and j are the isomorphisms
/// V'1 → W'1 whose graphs they are (v - i(v) ∈ T'1, v - j(v) ∈ U'1), and the
/// invariant factors of j⁻¹∘i classify the lattice up to isomorphism.
struct FiveSumInvariant {
    Subspace t1, u1;                  // in the ambient space
    Matrix i_map, j_map;              // V'1 → W'1 in quotient-interval bases
    std::vector<Polynomial> invariant_factors;  // of j⁻¹∘i
    Subspace t1_meet_u1_quotient;     // T'1 ∩ U'1 (may be nonzero)
};
FiveSumInvariant five_sum_invariant(const TwoSumDecomposition& dec);

/// Catalog of the lattice generated by a four-sum decomposition whose
/// commutator squares to zero: with
///   X = ({0}, (V2+W2)∩V1, V1∩W1, V1) and Y = ({0}, (V1+W1)∩V2, V2∩W2, V2),
/// the closure of {V1, V2, W1, W2} is contained in
/// {X_i ⊕ Y_j} ∪ {W1, W2} (at most 18 elements). Also checks the exchange
/// lemma (V1+W1)∩V2 = (V1+W1)∩W2 ⊆ V2∩W2 (and its mirror image) and the
/// product form X_i ⊕ Y_j = (X_i ⊕ V2) ∩ (V1 ⊕ Y_j).
/// Throws PreconditionError unless the four sums hold and theta² = 0.
TheoremReport verify_theta2_lattice(const TwoSumDecomposition& dec,
                                    std::size_t max_elements = kDefaultLatticeCap);

enum class DotLabels { dims, bases };

/// DOT digraph of the Hasse diagram, edges pointing from smaller to larger
/// element, generators highlighted.
std::string to_dot(const SubspaceLattice& lat, DotLabels labels = DotLabels::dims);

/// Plain-text legend mapping DOT node ids to basis matrices.
std::string dot_legend(const SubspaceLattice& lat);

}  // namespace sll

#pragma once

#include <cstdint>
#include <vector>

#include "sll/subspace.hpp"

namespace sll {

/// Exhaustive scan of GF(3)^4 for quadruples (V1, V2, W1, W2) with all four
/// pairwise direct sums, nonzero commutator and commutator square zero.
/// The scan runs over every ordered complementary pair of subspaces for the
/// V-side and the W-side (12692 x 12692 candidates) with table-driven
/// subspace arithmetic, so the whole space is covered in seconds. For every
/// hit the catalog property is checked in the same exact mod-3 arithmetic:
/// the closure of the four subspaces stays inside the eighteen-element
/// catalog {X_i + Y_j} ∪ {W1, W2} and the exchange-lemma equalities hold.
struct Theta2SearchOptions {
    /// Keep at most this many hits (in scan order) as library-level
    /// subspace quadruples for re-verification through the generic path.
    std::size_t sample_limit = 8;
    /// Stop scanning after this many hits; 0 scans everything.
    std::uint64_t stop_after_found = 0;
    /// Run the catalog check on every hit.
    bool check_catalog = true;
};

struct Theta2Instance {
    Subspace v1, v2, w1, w2;
};

struct Theta2SearchResult {
    std::uint64_t pairs_scanned = 0;      // ordered (V-pair, W-pair) combinations
    std::uint64_t four_sum_quadruples = 0;
    std::uint64_t found = 0;              // theta != 0, theta^2 = 0
    std::uint64_t catalog_failures = 0;   // expected 0
    std::vector<Theta2Instance> samples;
};

Theta2SearchResult theta2_search_gf3_dim4(const Theta2SearchOptions& options = {});

}  // namespace sll

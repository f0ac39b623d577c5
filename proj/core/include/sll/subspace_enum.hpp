#pragma once

#include <cstdint>
#include <vector>

#include "sll/subspace.hpp"

namespace sll {

/// Number of d-dimensional subspaces of GF(p)^n (Gaussian binomial).
std::uint64_t count_subspaces(std::uint32_t p, std::size_t n, std::size_t d);
std::uint64_t count_all_subspaces(std::uint32_t p, std::size_t n);

/// All d-dimensional subspaces of GF(p)^n, enumerated deterministically by
/// generating every RREF basis directly (pivot-column combinations in
/// lexicographic order, free entries in odometer order).
std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t n, std::size_t d);

/// All subspaces of GF(p)^n, by increasing dimension.
std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t n);

}  // namespace sll

#include "sll/subspace_enum.hpp"

#include <stdexcept>

namespace sll {

std::uint64_t count_subspaces(std::uint32_t p, std::size_t n, std::size_t d) {
    if (d > n) return 0;
    // Gaussian binomial [n choose d]_p = prod (p^(n-i) - 1) / (p^(d-i) - 1).
    auto pw = [&](std::size_t e) {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= p;
        return r;
    };
    std::uint64_t num = 1, den = 1;
    for (std::size_t i = 0; i < d; ++i) {
        num *= pw(n - i) - 1;
        den *= pw(d - i) - 1;
    }
    return num / den;
}

std::uint64_t count_all_subspaces(std::uint32_t p, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t d = 0; d <= n; ++d) total += count_subspaces(p, n, d);
    return total;
}

std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t n, std::size_t d) {
    if (!field.is_prime_field()) {
        throw std::invalid_argument("subspace enumeration requires a finite field");
    }
    const std::uint32_t p = field.modulus;
    std::vector<Subspace> out;
    if (d > n) return out;
    if (d == 0) {
        out.push_back(Subspace::zero(field, n));
        return out;
    }

    // Pivot-column combinations in lexicographic order.
    std::vector<std::size_t> pivots(d);
    for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
    for (;;) {
        // Free positions: (row r, col c) with c > pivots[r], c not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (std::size_t pcol : pivots) is_pivot[pcol] = true;
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = pivots[r] + 1; c < n; ++c) {
                if (!is_pivot[c]) free_pos.emplace_back(r, c);
            }
        }

        std::vector<std::uint32_t> digits(free_pos.size(), 0);
        for (;;) {
            Matrix basis(field, d, n);
            for (std::size_t r = 0; r < d; ++r) basis.set(r, pivots[r], Scalar::one(field));
            for (std::size_t i = 0; i < free_pos.size(); ++i) {
                basis.set(free_pos[i].first, free_pos[i].second, Scalar(field, digits[i]));
            }
            // Already a valid RREF matrix; from_rows leaves it unchanged.
            out.push_back(Subspace::from_rows(basis));

            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
            if (i == digits.size()) break;  // odometer wrapped completely
        }

        // Next pivot combination, lexicographic.
        bool advanced = false;
        for (std::size_t i = d; i-- > 0;) {
            if (pivots[i] < n - (d - i)) {
                ++pivots[i];
                for (std::size_t j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

std::vector<Subspace> all_subspaces(const FieldSpec& field, std::size_t n) {
    std::vector<Subspace> out;
    for (std::size_t d = 0; d <= n; ++d) {
        auto part = all_subspaces(field, n, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace sll

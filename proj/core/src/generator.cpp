#include "sll/generator.hpp"

#include <stdexcept>

namespace sll {

Matrix random_matrix(Rng& rng, const FieldSpec& field, std::size_t rows, std::size_t cols) {
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            long long v = field.is_prime_field()
                              ? static_cast<long long>(rng.below(field.modulus))
                              : rng.int_in(-3, 3);
            m.set(r, c, Scalar(field, v));
        }
    }
    return m;
}

Matrix random_invertible(Rng& rng, const FieldSpec& field, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, field, n, n);
        if (m.inverse().has_value()) return m;
    }
}

Subspace random_subspace(Rng& rng, const FieldSpec& field, std::size_t ambient_dim,
                         std::size_t dim) {
    if (dim > ambient_dim) throw std::invalid_argument("subspace dimension exceeds ambient");
    for (;;) {
        Subspace s = Subspace::from_rows(random_matrix(rng, field, dim, ambient_dim));
        if (s.dim() == dim) return s;
    }
}

Subspace random_complement(Rng& rng, const Subspace& s) {
    const std::size_t n = s.ambient_dim();
    for (;;) {
        Subspace c = random_subspace(rng, s.field(), n, n - s.dim());
        if (sum(s, c).is_full()) return c;
    }
}

BilinearForm random_symmetric_form(Rng& rng, const FieldSpec& field, std::size_t n) {
    for (;;) {
        Matrix g(field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                long long v = field.is_prime_field()
                                  ? static_cast<long long>(rng.below(field.modulus))
                                  : rng.int_in(-3, 3);
                Scalar s(field, v);
                g.set(i, j, s);
                g.set(j, i, s);
            }
        }
        if (g.inverse().has_value()) return BilinearForm::make(BilinearForm::Kind::symmetric, g);
    }
}

namespace {

/// Rows contributed by the elementary blocks, in block-local coordinates
/// shifted to a window starting at `offset`.
struct BlockRows {
    std::vector<std::vector<Scalar>> v1, v2, w1, w2;
};

void add_row(std::vector<std::vector<Scalar>>& rows, const FieldSpec& field, std::size_t n,
             std::initializer_list<std::pair<std::size_t, long long>> entries) {
    std::vector<Scalar> row(n, Scalar::zero(field));
    for (auto [col, value] : entries) row[col] = Scalar(field, value);
    rows.push_back(std::move(row));
}

/// Aligned block: V and W parts coincide; the whole window is e-type with the
/// chains stabilizing after one step.
void aligned_block(BlockRows& out, const FieldSpec& field, std::size_t n, std::size_t offset,
                   std::size_t size, std::size_t split) {
    for (std::size_t i = 0; i < size; ++i) {
        auto& v = i < split ? out.v1 : out.v2;
        auto& w = i < split ? out.w1 : out.w2;
        add_row(v, field, n, {{offset + i, 1}});
        add_row(w, field, n, {{offset + i, 1}});
    }
}

/// Sheared pair V1=<a>, V2=<b>, W1=<a+b>, W2=<b>: e-type of depth two.
void shear_e_block(BlockRows& out, const FieldSpec& field, std::size_t n, std::size_t offset) {
    add_row(out.v1, field, n, {{offset, 1}});
    add_row(out.v2, field, n, {{offset + 1, 1}});
    add_row(out.w1, field, n, {{offset, 1}, {offset + 1, 1}});
    add_row(out.w2, field, n, {{offset + 1, 1}});
}

/// Swapped block: W pairs cross the V pairs; tau-type, depth one.
void swapped_block(BlockRows& out, const FieldSpec& field, std::size_t n, std::size_t offset,
                   std::size_t size, std::size_t split) {
    for (std::size_t i = 0; i < size; ++i) {
        auto& v = i < split ? out.v1 : out.v2;
        auto& w = i < split ? out.w2 : out.w1;
        add_row(v, field, n, {{offset + i, 1}});
        add_row(w, field, n, {{offset + i, 1}});
    }
}

/// Sheared pair V1=<a>, V2=<b>, W1=<b>, W2=<a+b>: tau-type of depth two.
void shear_tau_block(BlockRows& out, const FieldSpec& field, std::size_t n, std::size_t offset) {
    add_row(out.v1, field, n, {{offset, 1}});
    add_row(out.v2, field, n, {{offset + 1, 1}});
    add_row(out.w1, field, n, {{offset + 1, 1}});
    add_row(out.w2, field, n, {{offset, 1}, {offset + 1, 1}});
}

/// Crossed lines V1=<a>, V2=<b>, W1=<a+b>, W2=<a-b>: the commutator is
/// invertible on the window (its square is -1/4).
void crossed_block(BlockRows& out, const FieldSpec& field, std::size_t n, std::size_t offset) {
    add_row(out.v1, field, n, {{offset, 1}});
    add_row(out.v2, field, n, {{offset + 1, 1}});
    add_row(out.w1, field, n, {{offset, 1}, {offset + 1, 1}});
    add_row(out.w2, field, n, {{offset, 1}, {offset + 1, -1}});
}

Subspace rows_to_subspace(const FieldSpec& field, std::size_t n,
                          const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(field, rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
    }
    return Subspace::from_rows(m);
}

}  // namespace

GeneratedTwoSum random_two_sum_with_profile(Rng& rng, const FieldSpec& field,
                                            const TwoSumProfile& profile) {
    if (profile.image_dim % 2 != 0) {
        throw std::invalid_argument("image-type block dimension must be even");
    }
    const std::size_t n = profile.e_dim + profile.tau_dim + profile.image_dim;
    if (n == 0) throw std::invalid_argument("empty profile");

    BlockRows rows;
    std::size_t offset = 0;

    std::size_t remaining = profile.e_dim;
    while (remaining > 0) {
        if (remaining >= 2 && rng.below(2) == 0) {
            shear_e_block(rows, field, n, offset);
            offset += 2;
            remaining -= 2;
        } else {
            std::size_t size = 1 + rng.below(remaining);
            aligned_block(rows, field, n, offset, size, rng.below(size + 1));
            offset += size;
            remaining -= size;
        }
    }
    remaining = profile.tau_dim;
    while (remaining > 0) {
        if (remaining >= 2 && rng.below(2) == 0) {
            shear_tau_block(rows, field, n, offset);
            offset += 2;
            remaining -= 2;
        } else {
            std::size_t size = 1 + rng.below(remaining);
            std::size_t split = 1 + rng.below(size > 1 ? size - 1 : 1);
            if (size == 1) split = rng.below(2);
            swapped_block(rows, field, n, offset, size, split);
            offset += size;
            remaining -= size;
        }
    }
    for (std::size_t i = 0; i < profile.image_dim / 2; ++i) {
        crossed_block(rows, field, n, offset);
        offset += 2;
    }

    Matrix g = random_invertible(rng, field, n);
    auto build = [&](const std::vector<std::vector<Scalar>>& r) {
        return apply(g, rows_to_subspace(field, n, r));
    };
    TwoSumDecomposition dec =
        TwoSumDecomposition::make(build(rows.v1), build(rows.v2), build(rows.w1), build(rows.w2));
    return GeneratedTwoSum{std::move(dec), profile};
}

GeneratedTwoSum random_two_sum(Rng& rng, const FieldSpec& field, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
    TwoSumProfile profile;
    profile.image_dim = 2 * rng.below(dim / 2 + 1);
    profile.e_dim = rng.below(dim - profile.image_dim + 1);
    profile.tau_dim = dim - profile.image_dim - profile.e_dim;
    return random_two_sum_with_profile(rng, field, profile);
}

GeneratedReflexive random_reflexive(Rng& rng, const FieldSpec& field, std::size_t dim) {
    BilinearForm form = random_symmetric_form(rng, field, dim);
    std::size_t k = dim >= 2 ? 1 + rng.below(dim - 1) : rng.below(dim + 1);
    Subspace v1 = random_subspace(rng, field, dim, k);
    Subspace v2 = random_complement(rng, v1);
    auto [dec, used] = reflexive_decomposition(form, v1, std::move(v2));
    return GeneratedReflexive{std::move(form), std::move(dec)};
}

namespace {

/// A nonzero isotropic vector for the form, or an empty optional when the
/// search budget runs out (possible in low dimension).
std::optional<Matrix> find_isotropic_vector(Rng& rng, const BilinearForm& form) {
    const std::size_t n = form.ambient_dim();
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix x = random_matrix(rng, form.field(), 1, n);
        if (x.is_zero()) continue;
        if (form.pairing(x, x).is_zero()) return x;
    }
    return std::nullopt;
}

}  // namespace

GeneratedCurvature random_curvature(Rng& rng, const FieldSpec& field, std::size_t dim,
                                    std::size_t tensor_count) {
    if (dim < 2) throw std::invalid_argument("curvature instances need dimension at least 2");

    // Three flavors in rotation: a fully random pair, a pair whose V1 has an
    // isotropic vector in its radical, and a pair of complementary totally
    // isotropic summands (the richest curvature spaces live there).
    std::uint64_t flavor = rng.below(3);

    if (flavor == 2 && dim % 2 == 0) {
        // Congruent image of the split form: gram = gᵀ H g makes g⁻¹ of the
        // standard isotropic summands totally isotropic for gram.
        Matrix h = BilinearForm::hyperbolic(field, dim).gram();
        Matrix g = random_invertible(rng, field, dim);
        BilinearForm form =
            BilinearForm::make(BilinearForm::Kind::symmetric, g.transpose() * h * g);
        Matrix ginv = *g.inverse();
        Matrix top(field, dim / 2, dim), bottom(field, dim / 2, dim);
        for (std::size_t i = 0; i < dim / 2; ++i) {
            top.set(i, i, Scalar::one(field));
            bottom.set(i, dim / 2 + i, Scalar::one(field));
        }
        Subspace v1 = apply(ginv, Subspace::from_rows(top));
        Subspace v2 = apply(ginv, Subspace::from_rows(bottom));
        auto [dec, used] = reflexive_decomposition(form, v1, std::move(v2));
        std::vector<Subspace> parts{dec.v1(), dec.v2()};
        std::vector<CurvatureTensor> basis = curvature_solution_space(field, dim, parts, &form);
        std::vector<CurvatureTensor> tensors;
        if (!basis.empty()) {
            for (std::size_t t = 0; t < tensor_count; ++t) {
                std::vector<Scalar> coeffs(dim * dim * dim * dim, Scalar::zero(field));
                for (const CurvatureTensor& b : basis) {
                    long long c = field.is_prime_field()
                                      ? static_cast<long long>(rng.below(field.modulus))
                                      : rng.int_in(-3, 3);
                    Scalar factor(field, c);
                    if (factor.is_zero()) continue;
                    for (std::size_t i = 0; i < coeffs.size(); ++i) {
                        coeffs[i] += factor * b.coeffs()[i];
                    }
                }
                tensors.push_back(CurvatureTensor::from_coeffs(field, dim, std::move(coeffs)));
            }
        }
        return GeneratedCurvature{std::move(form), std::move(dec), std::move(tensors)};
    }

    BilinearForm form = random_symmetric_form(rng, field, dim);
    std::size_t k = 1 + rng.below(dim - 1);
    Subspace v1 = Subspace::zero(field, dim);
    if (flavor != 0) {
        if (auto x = find_isotropic_vector(rng, form)) {
            Subspace line = Subspace::line(*x);
            Subspace within = form.perp(line);
            Matrix basis_rows = line.basis();
            for (int attempt = 0; attempt < 400 && Subspace::from_rows(basis_rows).dim() < k;
                 ++attempt) {
                // Random vector of perp(x): combine its basis rows randomly.
                Matrix coeffs = random_matrix(rng, field, 1, within.dim());
                Matrix candidate = coeffs * within.basis();
                basis_rows = vstack(basis_rows, candidate);
            }
            Subspace candidate = Subspace::from_rows(basis_rows);
            if (candidate.dim() == k) v1 = candidate;
        }
    }
    if (v1.dim() != k) v1 = random_subspace(rng, field, dim, k);
    Subspace v2 = random_complement(rng, v1);
    auto [dec, used] = reflexive_decomposition(form, v1, std::move(v2));

    std::vector<Subspace> parts{dec.v1(), dec.v2()};
    std::vector<CurvatureTensor> basis = curvature_solution_space(field, dim, parts, &form);

    std::vector<CurvatureTensor> tensors;
    if (!basis.empty()) {
        for (std::size_t t = 0; t < tensor_count; ++t) {
            std::vector<Scalar> coeffs(dim * dim * dim * dim, Scalar::zero(field));
            for (const CurvatureTensor& b : basis) {
                long long c = field.is_prime_field()
                                  ? static_cast<long long>(rng.below(field.modulus))
                                  : rng.int_in(-3, 3);
                Scalar factor(field, c);
                if (factor.is_zero()) continue;
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    coeffs[i] += factor * b.coeffs()[i];
                }
            }
            tensors.push_back(CurvatureTensor::from_coeffs(field, dim, std::move(coeffs)));
        }
    }
    return GeneratedCurvature{std::move(form), std::move(dec), std::move(tensors)};
}

}  // namespace sll

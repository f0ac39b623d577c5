#include "sll/curvature.hpp"

#include <stdexcept>

#include "sll/errors.hpp"

namespace sll {

namespace {

std::size_t idx(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * n + j) * n + k) * n + l;
}

}  // namespace

bool antisymmetry_check(const FieldSpec& field, std::size_t dim, std::span<const Scalar> coeffs) {
    if (coeffs.size() != dim * dim * dim * dim) {
        throw DimensionMismatchError("coefficient array has the wrong size");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (std::size_t k = 0; k < dim; ++k) {
                for (std::size_t l = 0; l < dim; ++l) {
                    const Scalar& a = coeffs[idx(dim, i, j, k, l)];
                    const Scalar& b = coeffs[idx(dim, j, i, k, l)];
                    if (a.field() != field) throw FieldMismatchError("coefficient field");
                    if (!(a == -b)) return false;
                }
            }
        }
    }
    return true;
}

bool bianchi_check(const FieldSpec& field, std::size_t dim, std::span<const Scalar> coeffs) {
    if (!antisymmetry_check(field, dim, coeffs)) {
        throw PreconditionError("coefficients are not antisymmetric in the first two slots");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            for (std::size_t k = j + 1; k < dim; ++k) {
                for (std::size_t l = 0; l < dim; ++l) {
                    Scalar cyclic = coeffs[idx(dim, i, j, k, l)] + coeffs[idx(dim, j, k, i, l)] +
                                    coeffs[idx(dim, k, i, j, l)];
                    if (!cyclic.is_zero()) return false;
                }
            }
        }
    }
    return true;
}

CurvatureTensor CurvatureTensor::from_coeffs(const FieldSpec& field, std::size_t dim,
                                             std::vector<Scalar> coeffs) {
    if (!bianchi_check(field, dim, coeffs)) {
        throw std::invalid_argument("coefficients violate the cyclic identity");
    }
    return CurvatureTensor(field, dim, std::move(coeffs));
}

Matrix CurvatureTensor::evaluate_basis(std::size_t i, std::size_t j) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t l = 0; l < dim_; ++l) m.set(l, k, c(i, j, k, l));
    }
    return m;
}

Matrix CurvatureTensor::evaluate(const Matrix& x, const Matrix& y) const {
    if (x.rows() != 1 || y.rows() != 1 || x.cols() != dim_ || y.cols() != dim_) {
        throw DimensionMismatchError("evaluate expects ambient row vectors");
    }
    if (x.field() != field_) throw FieldMismatchError("evaluate field");
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x.at(0, i).is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y.at(0, j).is_zero()) continue;
            Scalar factor = x.at(0, i) * y.at(0, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                for (std::size_t l = 0; l < dim_; ++l) {
                    if (c(i, j, k, l).is_zero()) continue;
                    m.set(l, k, m.at(l, k) + factor * c(i, j, k, l));
                }
            }
        }
    }
    return m;
}

bool CurvatureTensor::is_zero() const {
    for (const Scalar& s : coeffs_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

MatrixLieAlgebra berger_algebra(const FieldSpec& field, std::size_t dim,
                                std::span<const CurvatureTensor> tensors) {
    std::vector<Matrix> generators;
    for (const CurvatureTensor& r : tensors) {
        if (r.field() != field || r.dim() != dim) {
            throw DimensionMismatchError("tensors live in different spaces");
        }
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) {
                generators.push_back(r.evaluate_basis(i, j));
            }
        }
    }
    return lie_closure(field, dim, std::move(generators));
}

bool matches(const CurvatureTensor& r, const MatrixLieAlgebra& alg) {
    if (r.field() != alg.field() || r.dim() != alg.ambient_dim()) {
        throw DimensionMismatchError("tensor and algebra live in different spaces");
    }
    for (std::size_t i = 0; i < r.dim(); ++i) {
        for (std::size_t j = i + 1; j < r.dim(); ++j) {
            if (!alg.contains(r.evaluate_basis(i, j))) return false;
        }
    }
    return true;
}

std::vector<CurvatureTensor> curvature_solution_space(const FieldSpec& field, std::size_t dim,
                                                      std::span<const Subspace> invariant_parts,
                                                      const BilinearForm* form) {
    if (!invariant_parts.empty()) {
        std::vector<Subspace> parts(invariant_parts.begin(), invariant_parts.end());
        if (!is_direct_sum(parts)) {
            throw PreconditionError("invariant parts must form a direct sum of the whole space");
        }
    }
    if (form != nullptr && (form->field() != field || form->ambient_dim() != dim)) {
        throw DimensionMismatchError("form lives in a different space");
    }

    // Unknowns: c[i][j][k][l] for i < j; c[j][i] is determined by
    // antisymmetry and c[i][i] = 0.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);
    }
    const std::size_t block = dim * dim;
    const std::size_t unknowns = pairs.size() * block;
    auto unknown_of = [&](std::size_t pair_idx, std::size_t k, std::size_t l) {
        return pair_idx * block + k * dim + l;
    };
    // Signed coefficient of unknowns for the entry c[a][b][k][l] (a != b).
    auto locate = [&](std::size_t a, std::size_t b) -> std::pair<std::size_t, bool> {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (pairs[p] == std::make_pair(std::min(a, b), std::max(a, b))) {
                return {p, a < b};
            }
        }
        throw std::logic_error("pair lookup");
    };

    std::vector<std::vector<Scalar>> rows;
    auto new_row = [&]() -> std::vector<Scalar>& {
        rows.emplace_back(unknowns, Scalar::zero(field));
        return rows.back();
    };
    auto accumulate = [&](std::vector<Scalar>& row, std::size_t a, std::size_t b, std::size_t k,
                          std::size_t l, const Scalar& coeff) {
        if (a == b || coeff.is_zero()) return;
        auto [p, straight] = locate(a, b);
        std::size_t u = unknown_of(p, k, l);
        row[u] = straight ? row[u] + coeff : row[u] - coeff;
    };

    // First Bianchi on ordered triples.
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            for (std::size_t k = j + 1; k < dim; ++k) {
                for (std::size_t l = 0; l < dim; ++l) {
                    auto& row = new_row();
                    accumulate(row, i, j, k, l, Scalar::one(field));
                    accumulate(row, j, k, i, l, Scalar::one(field));
                    accumulate(row, k, i, j, l, Scalar::one(field));
                }
            }
        }
    }

    // Invariance: for every pair, basis vector b of the part and annihilator
    // functional u of the part: sum_{k,l} b_k u_l c[i][j][k][l] = 0.
    for (const Subspace& part : invariant_parts) {
        Subspace ann = annihilator(part);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            for (std::size_t bi = 0; bi < part.dim(); ++bi) {
                for (std::size_t ui = 0; ui < ann.dim(); ++ui) {
                    auto& row = new_row();
                    for (std::size_t k = 0; k < dim; ++k) {
                        for (std::size_t l = 0; l < dim; ++l) {
                            Scalar coeff = part.basis().at(bi, k) * ann.basis().at(ui, l);
                            std::size_t u = unknown_of(p, k, l);
                            row[u] = row[u] + coeff;
                        }
                    }
                }
            }
        }
    }

    // Form-skewness: Mᵀ G + G M = 0 with M[l][k] = c[i][j][k][l]:
    // sum_t c[i][j][r][t] G[t][s] + G[r][t] c[i][j][s][t] = 0.
    if (form != nullptr) {
        const Matrix& g = form->gram();
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            for (std::size_t r = 0; r < dim; ++r) {
                for (std::size_t s = 0; s < dim; ++s) {
                    auto& row = new_row();
                    for (std::size_t t = 0; t < dim; ++t) {
                        std::size_t u1 = unknown_of(p, r, t);
                        row[u1] = row[u1] + g.at(t, s);
                        std::size_t u2 = unknown_of(p, s, t);
                        row[u2] = row[u2] + g.at(r, t);
                    }
                }
            }
        }
    }

    Matrix constraints(field, rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < unknowns; ++c) constraints.set(r, c, rows[r][c]);
    }
    Matrix basis = constraints.kernel();

    std::vector<CurvatureTensor> out;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::vector<Scalar> coeffs(dim * dim * dim * dim, Scalar::zero(field));
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            for (std::size_t k = 0; k < dim; ++k) {
                for (std::size_t l = 0; l < dim; ++l) {
                    const Scalar& value = basis.at(r, unknown_of(p, k, l));
                    coeffs[idx(dim, i, j, k, l)] = value;
                    coeffs[idx(dim, j, i, k, l)] = -value;
                }
            }
        }
        out.push_back(CurvatureTensor::from_coeffs(field, dim, std::move(coeffs)));
    }
    return out;
}

TheoremReport verify_block_vanishing(const CurvatureTensor& r, std::span<const Subspace> parts) {
    std::vector<Subspace> vec(parts.begin(), parts.end());
    if (!is_direct_sum(vec)) {
        throw PreconditionError("parts must form a direct sum of the whole space");
    }
    for (const Subspace& part : parts) {
        for (std::size_t i = 0; i < r.dim(); ++i) {
            for (std::size_t j = i + 1; j < r.dim(); ++j) {
                if (!part.contains(apply(r.evaluate_basis(i, j), part))) {
                    throw PreconditionError("tensor values do not leave every part invariant");
                }
            }
        }
    }

    TheoremReport rep("curvature_block_vanishing");
    if (parts.size() < 3) {
        rep.mark_inapplicable("three_distinct_parts_vanish", "fewer than three parts");
        return rep;
    }
    auto basis_row = [&](const Subspace& s, std::size_t r_) {
        Matrix v(s.field(), 1, s.ambient_dim());
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) v.set(0, c, s.basis().at(r_, c));
        return v;
    };
    bool ok = true;
    for (std::size_t a = 0; a < parts.size() && ok; ++a) {
        for (std::size_t b = 0; b < parts.size() && ok; ++b) {
            for (std::size_t c = 0; c < parts.size() && ok; ++c) {
                if (a == b || b == c || a == c) continue;
                for (std::size_t i = 0; i < parts[a].dim() && ok; ++i) {
                    for (std::size_t j = 0; j < parts[b].dim() && ok; ++j) {
                        Matrix rij = r.evaluate(basis_row(parts[a], i), basis_row(parts[b], j));
                        for (std::size_t k = 0; k < parts[c].dim(); ++k) {
                            Matrix z = basis_row(parts[c], k);
                            if (!(rij * z.transpose()).is_zero()) {
                                ok = false;
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    rep.check("three_distinct_parts_vanish", ok);
    return rep;
}

bool exterior_product_check(const MatrixLieAlgebra& alg, std::span<const Subspace> parts) {
    std::vector<Subspace> vec(parts.begin(), parts.end());
    if (!is_direct_sum(vec)) {
        throw PreconditionError("parts must form a direct sum of the whole space");
    }
    for (const Subspace& part : parts) {
        if (!leaves_invariant(alg, part)) {
            throw PreconditionError("algebra must leave every part invariant");
        }
    }
    const FieldSpec field = alg.field();
    const std::size_t n = alg.ambient_dim();
    // Projector onto each part along the sum of the others.
    std::vector<Matrix> projectors;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Subspace others = Subspace::zero(field, n);
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) others = sum(others, parts[j]);
        }
        projectors.push_back(projector_onto(parts[i], others));
    }
    for (const Matrix& a : alg.basis()) {
        for (const Matrix& p : projectors) {
            if (!alg.contains(p * a * p)) return false;
        }
    }
    return true;
}

bool verify_pair_symmetry(const BilinearForm& form, const CurvatureTensor& r) {
    if (form.kind() != BilinearForm::Kind::symmetric) {
        throw PreconditionError("pair symmetry needs a symmetric form");
    }
    if (form.field() != r.field() || form.ambient_dim() != r.dim()) {
        throw DimensionMismatchError("form and tensor live in different spaces");
    }
    for (std::size_t i = 0; i < r.dim(); ++i) {
        for (std::size_t j = i + 1; j < r.dim(); ++j) {
            if (!form.is_skew(r.evaluate_basis(i, j))) {
                throw PreconditionError("tensor values are not skew for the form");
            }
        }
    }
    const std::size_t n = r.dim();
    const Matrix& g = form.gram();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix rij = r.evaluate_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    // <R(e_i,e_j) e_k, e_l> = sum_t c[i][j][k][t] G[t][l].
                    Scalar lhs = Scalar::zero(r.field());
                    Scalar rhs = Scalar::zero(r.field());
                    for (std::size_t t = 0; t < n; ++t) {
                        lhs += r.c(i, j, k, t) * g.at(t, l);
                        rhs += r.c(k, l, i, t) * g.at(t, j);
                    }
                    if (!(lhs == rhs)) return false;
                }
            }
        }
    }
    return true;
}

namespace {

void require_metric_setting(const BilinearForm& form, const TwoSumDecomposition& dec,
                            std::span<const CurvatureTensor> tensors,
                            const MatrixLieAlgebra& alg) {
    if (form.kind() != BilinearForm::Kind::symmetric) {
        throw PreconditionError("metric theorems need a symmetric form");
    }
    if (!is_reflexive_type(form, dec)) {
        throw PreconditionError("metric theorems need W_i = perp(V_i)");
    }
    for (const CurvatureTensor& r : tensors) {
        if (!matches(r, alg)) throw PreconditionError("a tensor does not match the algebra");
    }
    if (!leaves_invariant(alg, dec.v1()) || !leaves_invariant(alg, dec.v2())) {
        throw PreconditionError("algebra must leave V1 and V2 invariant");
    }
    for (const Matrix& a : alg.basis()) {
        if (!form.is_skew(a)) throw PreconditionError("algebra is not skew for the form");
    }
}

}  // namespace

TheoremReport verify_metric_theorem(const BilinearForm& form, const TwoSumDecomposition& dec,
                                    std::span<const CurvatureTensor> tensors) {
    MatrixLieAlgebra alg = berger_algebra(dec.field(), dec.ambient_dim(), tensors);
    require_metric_setting(form, dec, tensors, alg);

    TheoremReport rep("metric_curvature_theorem");
    const Matrix& theta = dec.theta();
    bool into_kernel = true;
    bool kills_image = true;
    for (const Matrix& a : alg.basis()) {
        into_kernel = into_kernel && (theta * a).is_zero();
        kills_image = kills_image && (a * theta).is_zero();
    }
    rep.check("algebra_maps_into_theta_kernel", into_kernel);
    rep.check("algebra_kills_theta_image", kills_image);

    CanonicalSplit split = dec.canonical_split();
    if (!split.f_e.is_full()) {
        rep.mark_inapplicable("tensors_vanish_on_each_summand",
                              "whole space is not the stable e-summand");
        return rep;
    }
    auto basis_row = [&](const Subspace& s, std::size_t r_) {
        Matrix v(s.field(), 1, s.ambient_dim());
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) v.set(0, c, s.basis().at(r_, c));
        return v;
    };
    bool vanish = true;
    for (const CurvatureTensor& r : tensors) {
        for (const Subspace* part : {&dec.v1(), &dec.v2()}) {
            for (std::size_t i = 0; i < part->dim() && vanish; ++i) {
                for (std::size_t j = i + 1; j < part->dim(); ++j) {
                    if (!r.evaluate(basis_row(*part, i), basis_row(*part, j)).is_zero()) {
                        vanish = false;
                        break;
                    }
                }
            }
        }
    }
    rep.check("tensors_vanish_on_each_summand", vanish);
    return rep;
}

TheoremReport verify_theta_square_zero(const BilinearForm& form, const TwoSumDecomposition& dec,
                                       std::span<const CurvatureTensor> tensors,
                                       const OracleBounds& bounds,
                                       std::optional<bool> asserted_indecomposable) {
    MatrixLieAlgebra alg = berger_algebra(dec.field(), dec.ambient_dim(), tensors);
    require_metric_setting(form, dec, tensors, alg);

    TheoremReport rep("theta_square_zero_corollary");

    bool v1_degenerate = !dec.v1().is_zero() && !dec.v1().is_full() &&
                         form.isotropy(dec.v1()) != BilinearForm::Isotropy::nondegenerate;
    bool v2_degenerate = !dec.v2().is_zero() && !dec.v2().is_full() &&
                         form.isotropy(dec.v2()) != BilinearForm::Isotropy::nondegenerate;
    if (!v1_degenerate && !v2_degenerate) {
        rep.mark_inapplicable("theta_square_vanishes",
                              "neither summand is a proper degenerate subspace");
        return rep;
    }

    bool indecomposable;
    if (asserted_indecomposable.has_value()) {
        indecomposable = *asserted_indecomposable;
        rep.check("indecomposability_established", true);
    } else {
        IrreducibilityVerdict verdict = weakly_irreducible_oracle(form, alg, bounds);
        switch (verdict.kind) {
            case IrreducibilityVerdict::Kind::infeasible:
                rep.mark_inapplicable("theta_square_vanishes",
                                      "indecomposability oracle infeasible at these bounds");
                return rep;
            case IrreducibilityVerdict::Kind::no:
                rep.mark_inapplicable(
                    "theta_square_vanishes",
                    "decomposable: nondegenerate invariant witness " + verdict.witness->str());
                return rep;
            case IrreducibilityVerdict::Kind::yes:
                indecomposable = true;
                rep.check("indecomposability_established", true);
                break;
        }
    }
    if (!indecomposable) {
        rep.mark_inapplicable("theta_square_vanishes", "caller asserted decomposable");
        return rep;
    }
    rep.check("theta_square_vanishes", (dec.theta() * dec.theta()).is_zero());
    return rep;
}

}  // namespace sll

#include "sll/bilinear_form.hpp"

#include <sstream>
#include <stdexcept>

#include "sll/errors.hpp"

namespace sll {

const char* to_string(BilinearForm::Kind k) {
    return k == BilinearForm::Kind::symmetric ? "symmetric" : "antisymmetric";
}

const char* to_string(BilinearForm::Isotropy i) {
    switch (i) {
        case BilinearForm::Isotropy::totally_isotropic: return "totally_isotropic";
        case BilinearForm::Isotropy::nondegenerate: return "nondegenerate";
        case BilinearForm::Isotropy::degenerate: return "degenerate";
    }
    return "?";
}

BilinearForm BilinearForm::make(Kind kind, Matrix gram) {
    if (!gram.is_square()) throw DimensionMismatchError("Gram matrix must be square");
    Matrix t = gram.transpose();
    if (kind == Kind::symmetric && t != gram) {
        throw std::invalid_argument("Gram matrix is not symmetric");
    }
    if (kind == Kind::antisymmetric) {
        if (t != -gram) throw std::invalid_argument("Gram matrix is not antisymmetric");
        if (gram.rows() % 2 != 0) {
            throw std::invalid_argument(
                "antisymmetric forms in odd dimension are always degenerate");
        }
    }
    auto inv = gram.inverse();
    if (!inv) throw std::invalid_argument("Gram matrix is degenerate");
    return BilinearForm(kind, std::move(gram), std::move(*inv));
}

BilinearForm BilinearForm::identity_form(const FieldSpec& field, std::size_t n) {
    return make(Kind::symmetric, Matrix::identity(field, n));
}

BilinearForm BilinearForm::hyperbolic(const FieldSpec& field, std::size_t n) {
    Matrix g(field, n, n);
    for (std::size_t i = 0; i < n; ++i) g.set(i, n - 1 - i, Scalar::one(field));
    return make(Kind::symmetric, std::move(g));
}

BilinearForm BilinearForm::symplectic(const FieldSpec& field, std::size_t n) {
    if (n % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
    Matrix g(field, n, n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        g.set(i, n / 2 + i, Scalar::one(field));
        g.set(n / 2 + i, i, -Scalar::one(field));
    }
    return make(Kind::antisymmetric, std::move(g));
}

Scalar BilinearForm::pairing(const Matrix& x, const Matrix& y) const {
    if (x.rows() != 1 || y.rows() != 1 || x.cols() != ambient_dim() || y.cols() != ambient_dim()) {
        throw DimensionMismatchError("pairing expects row vectors of the ambient dimension");
    }
    return (x * gram_ * y.transpose()).at(0, 0);
}

Subspace BilinearForm::perp(const Subspace& v) const {
    if (v.ambient_dim() != ambient_dim()) throw DimensionMismatchError("perp ambient");
    if (v.field() != field()) throw FieldMismatchError("perp field");
    // <x, b> = 0 for basis rows b  <=>  (B gramᵀ) x = 0.
    return Subspace::from_rows((v.basis() * gram_.transpose()).kernel());
}

Matrix BilinearForm::adjoint(const Matrix& m) const {
    if (!m.is_square() || m.rows() != ambient_dim()) {
        throw DimensionMismatchError("adjoint expects an ambient endomorphism");
    }
    return gram_inv_ * m.transpose() * gram_;
}

bool BilinearForm::is_skew(const Matrix& a) const {
    return (a.transpose() * gram_ + gram_ * a).is_zero();
}

bool BilinearForm::is_isometry(const Matrix& m) const {
    return m.transpose() * gram_ * m == gram_;
}

BilinearForm::Isotropy BilinearForm::isotropy(const Subspace& v) const {
    if (v.is_zero()) return Isotropy::nondegenerate;
    Subspace p = perp(v);
    if (p.contains(v)) return Isotropy::totally_isotropic;
    if (!intersect(v, p).is_zero()) return Isotropy::degenerate;
    return Isotropy::nondegenerate;
}

bool BilinearForm::orthogonal(const Subspace& a, const Subspace& b) const {
    return (a.basis() * gram_ * b.basis().transpose()).is_zero();
}

std::pair<TwoSumDecomposition, Subspace> reflexive_decomposition(const BilinearForm& form,
                                                                 const Subspace& v1,
                                                                 std::optional<Subspace> v2) {
    Subspace second = v2 ? std::move(*v2) : form.perp(v1);
    TwoSumDecomposition dec =
        TwoSumDecomposition::make(v1, second, form.perp(v1), form.perp(second));
    return {std::move(dec), std::move(second)};
}

bool para_kahler_check(const BilinearForm& form, const Matrix& l) {
    if (!l.is_square() || l.rows() != form.ambient_dim()) {
        throw DimensionMismatchError("para_kahler_check expects an ambient endomorphism");
    }
    return (l * l).is_identity() && form.adjoint(l) == -l;
}

bool is_reflexive_type(const BilinearForm& form, const TwoSumDecomposition& dec) {
    return dec.w1() == form.perp(dec.v1()) && dec.w2() == form.perp(dec.v2());
}

TheoremReport verify_orthogonal_split(const BilinearForm& form, const TwoSumDecomposition& dec) {
    if (form.ambient_dim() != dec.ambient_dim() || form.field() != dec.field()) {
        throw DimensionMismatchError("form and decomposition live in different spaces");
    }
    if (!is_reflexive_type(form, dec)) {
        throw PreconditionError("decomposition is not of reflexive type (W_i != perp(V_i))");
    }

    TheoremReport rep("reflexive_orthogonal_split");
    ChainReport ch = dec.chains();
    CanonicalSplit split = dec.canonical_split(ch);

    rep.check("f_e_orthogonal_to_f_tau", form.orthogonal(split.f_e, split.f_tau));
    rep.check("f_e_orthogonal_to_ftilde", form.orthogonal(split.f_e, split.ftilde));
    rep.check("f_tau_orthogonal_to_ftilde", form.orthogonal(split.f_tau, split.ftilde));
    rep.check("split_assembles_ambient",
              is_direct_sum(std::vector<Subspace>{split.f_e, split.f_tau, split.ftilde}));

    for (Sigma s : {Sigma::e, Sigma::tau}) {
        const auto& fs = ch.f_sigma(s);
        const auto& gs = ch.ftilde_sigma(s);
        bool ok = true;
        std::string detail;
        std::size_t upper = std::max(fs.size(), gs.size());
        for (std::size_t n = 0; n < upper; ++n) {
            const Subspace& a = n < fs.size() ? fs[n] : fs.back();
            const Subspace& b = n < gs.size() ? gs[n] : gs.back();
            if (form.perp(a) != b) {
                ok = false;
                std::ostringstream os;
                os << "n=" << n << ": perp=" << form.perp(a).str() << " chain=" << b.str();
                detail = os.str();
                break;
            }
        }
        rep.check(std::string("f_sigma_perp_matches_dual_chain_") + to_string(s), ok, detail);

        // Stable value: the perp chain is the other summand plus the image part.
        Subspace expected = sum(ch.f_sigma_inf(other(s)), split.ftilde);
        rep.check(std::string("stable_dual_chain_assembles_") + to_string(s),
                  ch.ftilde_sigma_inf(s) == expected,
                  "stable dual chain differs from complement-plus-image");
    }
    return rep;
}

}  // namespace sll

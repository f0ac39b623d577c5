#include <doctest.h>

#include "fixtures.hpp"
#include "sll/bilinear_form.hpp"
#include "sll/errors.hpp"
#include "test_helpers.hpp"

using namespace sll;
using sll::testing::TestRng;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

Subspace span_ints(const FieldSpec& f,
                   std::initializer_list<std::initializer_list<long long>> rows) {
    return Subspace::from_rows(Matrix::from_ints(f, rows));
}

BilinearForm random_symmetric_form(TestRng& rng, const FieldSpec& field, std::size_t n) {
    for (;;) {
        Matrix g(field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Scalar v = sll::testing::random_scalar(rng, field);
                g.set(i, j, v);
                g.set(j, i, v);
            }
        }
        if (g.inverse().has_value()) return BilinearForm::make(BilinearForm::Kind::symmetric, g);
    }
}

Subspace random_subspace(TestRng& rng, const FieldSpec& field, std::size_t n, std::size_t d) {
    for (;;) {
        Subspace s = Subspace::from_rows(sll::testing::random_matrix(rng, field, d, n));
        if (s.dim() == d) return s;
    }
}

/// Random reflexive decomposition: random nondegenerate symmetric Gram matrix
/// plus a random complemented V1.
std::pair<BilinearForm, TwoSumDecomposition> random_reflexive(TestRng& rng, const FieldSpec& field,
                                                              std::size_t n) {
    BilinearForm form = random_symmetric_form(rng, field, n);
    for (;;) {
        std::size_t k = 1 + rng.below(n - 1);
        Subspace v1 = random_subspace(rng, field, n, k);
        Subspace v2 = random_subspace(rng, field, n, n - k);
        if (!is_direct_sum(std::vector<Subspace>{v1, v2})) continue;
        auto [dec, used] = reflexive_decomposition(form, v1, v2);
        return {std::move(form), std::move(dec)};
    }
}
}  // namespace

TEST_CASE("form construction validates its invariants") {
    CHECK_NOTHROW(BilinearForm::identity_form(Q, 3));
    CHECK_NOTHROW(BilinearForm::hyperbolic(F5, 4));
    CHECK_NOTHROW(BilinearForm::symplectic(Q, 2));
    // Degenerate gram.
    CHECK_THROWS_AS(
        BilinearForm::make(BilinearForm::Kind::symmetric, Matrix::from_ints(Q, {{1, 1}, {1, 1}})),
        std::invalid_argument);
    // Wrong symmetry.
    CHECK_THROWS_AS(
        BilinearForm::make(BilinearForm::Kind::symmetric, Matrix::from_ints(Q, {{0, 1}, {-1, 0}})),
        std::invalid_argument);
    // Antisymmetric in odd dimension.
    CHECK_THROWS_AS(BilinearForm::symplectic(Q, 3), std::invalid_argument);
    CHECK_THROWS_AS(
        BilinearForm::make(BilinearForm::Kind::antisymmetric, Matrix(Q, 3, 3)),
        std::invalid_argument);
}

TEST_CASE("perp on stated cases") {
    BilinearForm hyp = BilinearForm::hyperbolic(Q, 2);  // [[0,1],[1,0]]
    CHECK(hyp.perp(span_ints(Q, {{1, 0}})) == span_ints(Q, {{1, 0}}));  // isotropic line
    CHECK(hyp.perp(Subspace::zero(Q, 2)) == Subspace::full(Q, 2));
    CHECK(hyp.perp(Subspace::full(Q, 2)).is_zero());

    BilinearForm id3 = BilinearForm::identity_form(Q, 3);
    CHECK(id3.perp(span_ints(Q, {{1, 0, 0}})) == span_ints(Q, {{0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("perp properties on random subspaces") {
    TestRng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng.below(4);
        BilinearForm form = random_symmetric_form(rng, F5, n);
        Subspace a = random_subspace(rng, F5, n, rng.below(n + 1));
        Subspace b = random_subspace(rng, F5, n, rng.below(n + 1));
        CHECK(form.perp(a).dim() == n - a.dim());
        CHECK(form.perp(form.perp(a)) == a);
        CHECK(form.perp(sum(a, b)) == intersect(form.perp(a), form.perp(b)));
        CHECK(form.perp(intersect(a, b)) == sum(form.perp(a), form.perp(b)));
        if (a.contains(b)) CHECK(form.perp(b).contains(form.perp(a)));
    }
}

TEST_CASE("reflexive_decomposition reproduces the fixtures") {
    // Hyperbolic plane with the coordinate lines: W_i = V_i, the aligned fixture.
    BilinearForm hyp = BilinearForm::hyperbolic(Q, 2);
    auto [dec_h, v2_h] = reflexive_decomposition(hyp, span_ints(Q, {{1, 0}}),
                                                 span_ints(Q, {{0, 1}}));
    CHECK(dec_h.w1() == dec_h.v1());
    CHECK(dec_h.w2() == dec_h.v2());
    CHECK(dec_h.theta().is_zero());
    CHECK(dec_h.canonical_split().f_e.is_full());

    // Euclidean plane with the coordinate lines: the swapped fixture.
    BilinearForm id2 = BilinearForm::identity_form(Q, 2);
    auto [dec_i, v2_i] = reflexive_decomposition(id2, span_ints(Q, {{1, 0}}),
                                                 span_ints(Q, {{0, 1}}));
    CHECK(dec_i.w1() == dec_i.v2());
    CHECK(dec_i.w2() == dec_i.v1());
    CHECK(dec_i.canonical_split().f_tau.is_full());

    // Default v2 = perp(v1) works for nondegenerate v1.
    auto [dec_d, v2_d] = reflexive_decomposition(id2, span_ints(Q, {{1, 0}}));
    CHECK(v2_d == span_ints(Q, {{0, 1}}));

    // Isotropic v1 with no complement given: v1 + perp(v1) is not the plane.
    CHECK_THROWS_AS(reflexive_decomposition(hyp, span_ints(Q, {{1, 0}})), NotComplementaryError);
}

TEST_CASE("isotropy classification") {
    BilinearForm hyp = BilinearForm::hyperbolic(Q, 2);
    CHECK(hyp.isotropy(span_ints(Q, {{1, 0}})) == BilinearForm::Isotropy::totally_isotropic);
    CHECK(hyp.isotropy(span_ints(Q, {{1, 1}})) == BilinearForm::Isotropy::nondegenerate);
    CHECK(hyp.isotropy(Subspace::zero(Q, 2)) == BilinearForm::Isotropy::nondegenerate);
    CHECK(hyp.isotropy(Subspace::full(Q, 2)) == BilinearForm::Isotropy::nondegenerate);

    BilinearForm id2 = BilinearForm::identity_form(Q, 2);
    CHECK(id2.isotropy(span_ints(Q, {{1, 0}})) == BilinearForm::Isotropy::nondegenerate);

    // In diag(1,-1) the diagonal line is isotropic.
    BilinearForm diag =
        BilinearForm::make(BilinearForm::Kind::symmetric, Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
    CHECK(diag.isotropy(span_ints(Q, {{1, 1}})) == BilinearForm::Isotropy::totally_isotropic);

    // A degenerate-but-not-isotropic plane in dimension 3.
    BilinearForm m3 = BilinearForm::make(
        BilinearForm::Kind::symmetric,
        Matrix::from_ints(Q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(m3.isotropy(span_ints(Q, {{1, 0, 0}, {0, 0, 1}})) == BilinearForm::Isotropy::degenerate);
}

TEST_CASE("adjoint") {
    BilinearForm id2 = BilinearForm::identity_form(Q, 2);
    Matrix m = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
    CHECK(id2.adjoint(m) == m.transpose());

    BilinearForm hyp = BilinearForm::hyperbolic(Q, 2);
    Matrix d = Matrix::from_ints(Q, {{1, 0}, {0, -1}});
    CHECK(hyp.adjoint(d) == -d);

    TestRng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.below(3);
        BilinearForm form = random_symmetric_form(rng, F5, n);
        Matrix a = sll::testing::random_matrix(rng, F5, n, n);
        Matrix b = sll::testing::random_matrix(rng, F5, n, n);
        CHECK(form.adjoint(form.adjoint(a)) == a);
        CHECK(form.adjoint(a * b) == form.adjoint(b) * form.adjoint(a));
        // Defining identity on random vectors.
        Matrix x = sll::testing::random_matrix(rng, F5, 1, n);
        Matrix y = sll::testing::random_matrix(rng, F5, 1, n);
        CHECK(form.pairing((a * x.transpose()).transpose(), y) ==
              form.pairing(x, (form.adjoint(a) * y.transpose()).transpose()));
    }
}

TEST_CASE("para-Kähler check") {
    BilinearForm hyp = BilinearForm::hyperbolic(Q, 2);
    Matrix d = Matrix::from_ints(Q, {{1, 0}, {0, -1}});
    CHECK(para_kahler_check(hyp, d));
    CHECK_FALSE(para_kahler_check(BilinearForm::identity_form(Q, 2), d));
    CHECK_FALSE(para_kahler_check(hyp, Matrix::identity(Q, 2)));
}

TEST_CASE("para-Kähler structures are exactly the self-perpendicular splits") {
    // The involution of a complementary pair is anti-self-adjoint for the
    // form exactly when each summand is its own perp.
    BilinearForm hyp4 = BilinearForm::hyperbolic(Q, 4);
    Subspace iso1 = span_ints(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Subspace iso2 = span_ints(Q, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    Matrix l_good = projector_onto(iso1, iso2) - projector_onto(iso2, iso1);
    CHECK(para_kahler_check(hyp4, l_good));
    CHECK(hyp4.perp(iso1) == iso1);
    CHECK(hyp4.perp(iso2) == iso2);

    TestRng rng(37);
    int done = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + 2 * rng.below(2);  // 2 or 4
        BilinearForm form = random_symmetric_form(rng, F5, n);
        Subspace v1 = random_subspace(rng, F5, n, n / 2);
        Subspace v2 = random_subspace(rng, F5, n, n / 2);
        if (!is_direct_sum(std::vector<Subspace>{v1, v2})) continue;
        ++done;
        Matrix l = projector_onto(v1, v2) - projector_onto(v2, v1);
        bool is_para_kahler = para_kahler_check(form, l);
        bool self_perp = form.perp(v1) == v1 && form.perp(v2) == v2;
        CHECK(is_para_kahler == self_perp);
    }
    CHECK(done > 0);
}

TEST_CASE("reflexive L and L' adjoint behaviour") {
    TestRng rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 2 + rng.below(4);
        auto [form, dec] = random_reflexive(rng, F5, n);
        Matrix l = dec.projector(TwoSumDecomposition::Which::p1) -
                   dec.projector(TwoSumDecomposition::Which::q2);
        Matrix lp = dec.projector(TwoSumDecomposition::Which::p1) -
                    dec.projector(TwoSumDecomposition::Which::q1);
        CHECK(form.adjoint(l) == -l);
        CHECK(form.adjoint(lp) == lp);
    }
}

TEST_CASE("verify_orthogonal_split on fixtures") {
    BilinearForm hyp = BilinearForm::hyperbolic(Q, 2);
    auto [dec_h, v2h] = reflexive_decomposition(hyp, span_ints(Q, {{1, 0}}), span_ints(Q, {{0, 1}}));
    TheoremReport rh = verify_orthogonal_split(hyp, dec_h);
    INFO(rh.summary());
    CHECK(rh.all_passed());

    BilinearForm id2 = BilinearForm::identity_form(Q, 2);
    auto [dec_i, v2i] = reflexive_decomposition(id2, span_ints(Q, {{1, 0}}), span_ints(Q, {{0, 1}}));
    TheoremReport ri = verify_orthogonal_split(id2, dec_i);
    INFO(ri.summary());
    CHECK(ri.all_passed());

    // Non-reflexive decomposition is rejected.
    CHECK_THROWS_AS(verify_orthogonal_split(hyp, dec_i), PreconditionError);
}

TEST_CASE("verify_orthogonal_split on random reflexive instances") {
    TestRng rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 2 + rng.below(5);
        auto [form, dec] = random_reflexive(rng, F5, n);
        TheoremReport rep = verify_orthogonal_split(form, dec);
        INFO(rep.summary());
        CHECK(rep.all_passed());
    }
}

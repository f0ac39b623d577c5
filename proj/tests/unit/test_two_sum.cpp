#include <doctest.h>

#include "fixtures.hpp"
#include "sll/errors.hpp"
#include "sll/two_sum.hpp"
#include "test_helpers.hpp"

using namespace sll;
using sll::testing::TestRng;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);

Subspace span_ints(const FieldSpec& f,
                   std::initializer_list<std::initializer_list<long long>> rows) {
    return Subspace::from_rows(Matrix::from_ints(f, rows));
}

/// Fully random valid decomposition: two independently drawn complementary
/// pairs obtained by splitting the columns of random invertible matrices.
TwoSumDecomposition random_decomposition(TestRng& rng, const FieldSpec& field, std::size_t n) {
    auto random_pair = [&](std::size_t k) {
        for (;;) {
            Matrix g = sll::testing::random_matrix(rng, field, n, n);
            if (!g.inverse().has_value()) continue;
            Matrix top(field, k, n), bottom(field, n - k, n);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < n; ++c) top.set(r, c, g.at(r, c));
            for (std::size_t r = k; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) bottom.set(r - k, c, g.at(r, c));
            return std::make_pair(Subspace::from_rows(top), Subspace::from_rows(bottom));
        }
    };
    auto [v1, v2] = random_pair(1 + rng.below(n));
    auto [w1, w2] = random_pair(1 + rng.below(n));
    return TwoSumDecomposition::make(v1, v2, w1, w2);
}
}  // namespace

TEST_CASE("make validates complementarity") {
    CHECK_NOTHROW(sll::testing::crossed_fixture());
    CHECK_NOTHROW(sll::testing::aligned_fixture());
    Subspace e1 = span_ints(Q, {{1, 0}});
    Subspace e2 = span_ints(Q, {{0, 1}});
    CHECK_THROWS_AS(TwoSumDecomposition::make(e1, e1, e1, e2), NotComplementaryError);
    try {
        TwoSumDecomposition::make(e1, e2, e1, e1);
    } catch (const NotComplementaryError& e) {
        CHECK(e.which() == "W");
    }
    CHECK_THROWS_AS(TwoSumDecomposition::make(e1, e2, e1, Subspace::zero(F3, 2)),
                    FieldMismatchError);
}

TEST_CASE("projectors of the fixtures") {
    auto aligned = sll::testing::aligned_fixture();
    CHECK(aligned.projector(TwoSumDecomposition::Which::p1) == Matrix::from_ints(Q, {{1, 0}, {0, 0}}));

    auto crossed = sll::testing::crossed_fixture();
    // Solving (x,y) = a(1,1) + b(1,-1) gives the projector onto W1 by hand.
    CHECK(crossed.projector(TwoSumDecomposition::Which::q1) ==
          Matrix::from_strings(Q, {{"1/2", "1/2"}, {"1/2", "1/2"}}));

    TestRng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto dec = random_decomposition(rng, F3, 2 + rng.below(3));
        for (auto which : {TwoSumDecomposition::Which::p1, TwoSumDecomposition::Which::p2,
                           TwoSumDecomposition::Which::q1, TwoSumDecomposition::Which::q2}) {
            const Matrix& p = dec.projector(which);
            CHECK(p * p == p);
        }
    }
}

TEST_CASE("theta on the fixtures") {
    CHECK(sll::testing::aligned_fixture().theta().is_zero());
    CHECK(sll::testing::swapped_fixture().theta().is_zero());
    Matrix theta = sll::testing::crossed_fixture().theta();
    CHECK(theta == Matrix::from_strings(Q, {{"0", "-1/2"}, {"1/2", "0"}}));
    // theta^2 = -1/4 I, hence invertible.
    CHECK(theta * theta == Scalar::rational(-1, 4) * Matrix::identity(Q, 2));
}

TEST_CASE("dual decomposition") {
    auto aligned = sll::testing::aligned_fixture();
    auto dual = aligned.dual();
    CHECK(dual.v1() == span_ints(Q, {{0, 1}}));
    CHECK(dual.v2() == span_ints(Q, {{1, 0}}));
    CHECK(dual.w1() == span_ints(Q, {{0, 1}}));
    CHECK(dual.w2() == span_ints(Q, {{1, 0}}));

    auto crossed = sll::testing::crossed_fixture();
    CHECK(crossed.dual().theta() == crossed.theta().transpose());

    TestRng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto dec = random_decomposition(rng, F3, 2 + rng.below(3));
        CHECK(dec.dual().theta() == dec.theta().transpose());
        // Double dual is the original under the canonical identification.
        auto dd = dec.dual().dual();
        CHECK(dd.v1() == dec.v1());
        CHECK(dd.w2() == dec.w2());
    }
}

TEST_CASE("chains on the fixtures") {
    SUBCASE("aligned") {
        ChainReport ch = sll::testing::aligned_fixture().chains();
        CHECK(ch.f[1].is_full());
        CHECK(ch.f_e[1].is_full());
        CHECK(ch.f_tau[1].is_zero());
        CHECK(ch.ftilde[1].is_zero());
        CHECK(ch.f_inf().is_full());
        CHECK(ch.ftilde_inf().is_zero());
    }
    SUBCASE("swapped") {
        ChainReport ch = sll::testing::swapped_fixture().chains();
        CHECK(ch.f_tau[1].is_full());
        CHECK(ch.f_e[1].is_zero());
    }
    SUBCASE("crossed: invertible commutator keeps the kernel chain at zero") {
        ChainReport ch = sll::testing::crossed_fixture().chains();
        for (const auto& s : ch.f) CHECK(s.is_zero());
        for (const auto& s : ch.ftilde) CHECK(s.is_full());
        CHECK(ChainReport::stabilization_index(ch.f) == 0);
    }
}

TEST_CASE("chain shape invariants on random decompositions") {
    TestRng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + rng.below(4);
        auto dec = random_decomposition(rng, F3, n);
        ChainReport ch = dec.chains();
        for (const auto* chain : {&ch.f, &ch.f_e, &ch.f_tau}) {
            for (std::size_t k = 0; k + 1 < chain->size(); ++k) {
                CHECK((*chain)[k + 1].contains((*chain)[k]));  // weakly increasing
            }
            CHECK(ChainReport::stabilization_index(*chain) <= n);
        }
        for (const auto* chain : {&ch.ftilde, &ch.ftilde_e, &ch.ftilde_tau}) {
            for (std::size_t k = 0; k + 1 < chain->size(); ++k) {
                CHECK((*chain)[k].contains((*chain)[k + 1]));  // weakly decreasing
            }
            CHECK(ChainReport::stabilization_index(*chain) <= n);
        }
    }
}

TEST_CASE("canonical split on the fixtures") {
    auto check_split = [](const TwoSumDecomposition& dec, std::size_t de, std::size_t dt,
                          std::size_t dg) {
        CanonicalSplit split = dec.canonical_split();
        CHECK(split.f_e.dim() == de);
        CHECK(split.f_tau.dim() == dt);
        CHECK(split.ftilde.dim() == dg);
        CHECK(is_direct_sum(std::vector<Subspace>{split.f_e, split.f_tau, split.ftilde}));
    };
    check_split(sll::testing::aligned_fixture(), 2, 0, 0);
    check_split(sll::testing::swapped_fixture(), 0, 2, 0);
    check_split(sll::testing::crossed_fixture(), 0, 0, 2);
}

TEST_CASE("canonical split: nilpotent and invertible parts") {
    TestRng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.below(4);
        auto dec = random_decomposition(rng, F3, n);
        ChainReport ch = dec.chains();
        CanonicalSplit split = dec.canonical_split(ch);

        CHECK(sum(split.f_e, split.f_tau) == ch.f_inf());
        CHECK(intersect(split.f_e, split.f_tau).is_zero());
        CHECK(is_direct_sum(std::vector<Subspace>{ch.f_inf(), split.ftilde}));

        // theta is nilpotent on the stable kernel chain...
        Matrix theta_pow = dec.theta().pow(n);
        CHECK(apply(theta_pow, ch.f_inf()).is_zero());
        // ... and invertible on the stable image chain.
        CHECK(apply(dec.theta(), split.ftilde) == split.ftilde);
    }
}

TEST_CASE("theta anti-commutes with the pairing involution") {
    // L = p1 - q2 satisfies theta L = -L theta.
    TestRng rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        auto dec = random_decomposition(rng, F3, 2 + rng.below(4));
        Matrix l = dec.projector(TwoSumDecomposition::Which::p1) -
                   dec.projector(TwoSumDecomposition::Which::q2);
        CHECK(dec.theta() * l == -(l * dec.theta()));
    }
}

TEST_CASE("verify_chain_identities passes on fixtures") {
    for (auto dec : {sll::testing::aligned_fixture(), sll::testing::swapped_fixture(),
                     sll::testing::crossed_fixture()}) {
        TheoremReport rep = dec.verify_chain_identities();
        INFO(rep.summary());
        CHECK(rep.all_passed());
    }
}

TEST_CASE("verify_chain_identities passes on random GF(3) decompositions") {
    TestRng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto dec = random_decomposition(rng, F3, 2 + rng.below(5));
        TheoremReport rep = dec.verify_chain_identities();
        INFO(rep.summary());
        CHECK(rep.all_passed());
    }
}

TEST_CASE("annihilators swap the chains of the dual decomposition") {
    // For every n: F(n)' = ftilde_dual(n), ftilde(n)' = f_dual(n), and the
    // sigma-indexed chains pair up the same way.
    TestRng rng(19);
    for (int trial = 0; trial < 12; ++trial) {
        auto dec = random_decomposition(rng, F3, 2 + rng.below(4));
        auto dual = dec.dual();
        ChainReport ch = dec.chains();
        ChainReport dch = dual.chains();
        auto at = [](const std::vector<Subspace>& chain, std::size_t n) -> const Subspace& {
            return n < chain.size() ? chain[n] : chain.back();
        };
        std::size_t upper = dec.ambient_dim() + 1;
        for (std::size_t n = 0; n <= upper; ++n) {
            CHECK(annihilator(at(ch.f, n)) == at(dch.ftilde, n));
            CHECK(annihilator(at(ch.ftilde, n)) == at(dch.f, n));
            CHECK(annihilator(at(ch.f_e, n)) == at(dch.ftilde_e, n));
            CHECK(annihilator(at(ch.f_tau, n)) == at(dch.ftilde_tau, n));
        }
    }
}

TEST_CASE("conjugation moves the split") {
    TestRng rng(17);
    auto dec = random_decomposition(rng, F3, 4);
    Matrix g(F3, 0, 0);
    for (;;) {
        g = sll::testing::random_matrix(rng, F3, 4, 4);
        if (g.inverse().has_value()) break;
    }
    auto conj = dec.conjugated(g);
    CanonicalSplit s0 = dec.canonical_split();
    CanonicalSplit s1 = conj.canonical_split();
    CHECK(apply(g, s0.f_e) == s1.f_e);
    CHECK(apply(g, s0.f_tau) == s1.f_tau);
    CHECK(apply(g, s0.ftilde) == s1.ftilde);
}

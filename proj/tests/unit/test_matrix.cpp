#include <doctest.h>

#include "sll/errors.hpp"
#include "sll/matrix.hpp"
#include "test_helpers.hpp"

using namespace sll;
using sll::testing::TestRng;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
}  // namespace

TEST_CASE("rref on the stated cases") {
    SUBCASE("identity") {
        Matrix id = Matrix::identity(Q, 3);
        auto r = id.rref();
        CHECK(r.reduced == id);
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
        CHECK(r.rank == 3);
    }
    SUBCASE("zero") {
        Matrix z(Q, 2, 2);
        auto r = z.rref();
        CHECK(r.reduced == z);
        CHECK(r.pivots.empty());
        CHECK(r.rank == 0);
    }
    SUBCASE("dependent rows") {
        Matrix m = Matrix::from_ints(Q, {{1, 2}, {2, 4}});
        auto r = m.rref();
        CHECK(r.reduced == Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
        CHECK(r.rank == 1);
    }
}

TEST_CASE("rref is idempotent") {
    TestRng rng(1);
    for (FieldSpec field : {Q, F3, F5}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t rows = 1 + rng.below(5);
            std::size_t cols = 1 + rng.below(5);
            Matrix m = sll::testing::random_matrix(rng, field, rows, cols);
            Matrix once = m.rref().reduced;
            CHECK(once.rref().reduced == once);
        }
    }
}

TEST_CASE("kernel basics") {
    CHECK(Matrix::identity(Q, 4).kernel().rows() == 0);
    Matrix z(Q, 3, 3);
    CHECK(z.kernel() == Matrix::identity(Q, 3));

    // [[1,1]] over GF(3): the nullspace is spanned by (1,2).
    Matrix m = Matrix::from_ints(F3, {{1, 1}});
    CHECK(m.kernel() == Matrix::from_ints(F3, {{1, 2}}));
}

TEST_CASE("kernel of [[1,1]] over GF(3) matches vector enumeration") {
    // Independent oracle: scan all 9 vectors of GF(3)^2.
    Matrix m = Matrix::from_ints(F3, {{1, 1}});
    std::set<std::vector<std::uint32_t>> expected;
    for (std::uint32_t x = 0; x < 3; ++x) {
        for (std::uint32_t y = 0; y < 3; ++y) {
            if ((x + y) % 3 == 0) expected.insert({x, y});
        }
    }
    auto got = sll::testing::enumerate_span(m.kernel(), 3);
    CHECK(got == expected);
}

TEST_CASE("rank plus nullity equals column count") {
    TestRng rng(7);
    for (FieldSpec field : {Q, F3, F5}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + rng.below(6);
            std::size_t cols = 1 + rng.below(6);
            Matrix m = sll::testing::random_matrix(rng, field, rows, cols);
            CHECK(m.rank() + m.kernel().rows() == cols);
            // Kernel rows really are annihilated.
            CHECK((m * m.kernel().transpose()).is_zero());
        }
    }
}

TEST_CASE("image basics") {
    CHECK(Matrix::identity(F5, 3).image() == Matrix::identity(F5, 3));
    CHECK(Matrix(Q, 2, 2).image().rows() == 0);

    // The commutator matrix of the crossed-lines fixture has full image.
    Matrix theta = Matrix::from_strings(Q, {{"0", "-1/2"}, {"1/2", "0"}});
    CHECK(theta.image() == Matrix::identity(Q, 2));
}

TEST_CASE("matpow_kernel") {
    Matrix nilp = Matrix::from_ints(Q, {{0, 1}, {0, 0}});
    CHECK(nilp.matpow_kernel(0).rows() == 0);  // power zero is the identity
    CHECK(nilp.matpow_kernel(1) == Matrix::from_ints(Q, {{1, 0}}));
    CHECK(nilp.matpow_kernel(2) == Matrix::identity(Q, 2));

    Matrix theta = Matrix::from_strings(Q, {{"0", "-1/2"}, {"1/2", "0"}});
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(theta.matpow_kernel(k).rows() == 0);  // theta^2 = -1/4 I, invertible
    }
    Matrix rect(Q, 2, 3);
    CHECK_THROWS_AS(rect.matpow_kernel(1), DimensionMismatchError);
}

TEST_CASE("inverse and solve") {
    Matrix a = Matrix::from_ints(Q, {{2, 1}, {1, 1}});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((a * *inv).is_identity());
    CHECK_FALSE(Matrix::from_ints(Q, {{1, 2}, {2, 4}}).inverse().has_value());

    Matrix rhs = Matrix::from_ints(Q, {{1}, {0}});
    auto x = a.solve(rhs);
    REQUIRE(x.has_value());
    CHECK(a * *x == rhs);

    // Inconsistent system.
    Matrix sing = Matrix::from_ints(Q, {{1, 2}, {2, 4}});
    CHECK_FALSE(sing.solve(Matrix::from_ints(Q, {{0}, {1}})).has_value());
}

TEST_CASE("product and bracket sanity") {
    Matrix a = Matrix::from_ints(F5, {{1, 2}, {3, 4}});
    Matrix b = Matrix::from_ints(F5, {{0, 1}, {1, 0}});
    CHECK(a * Matrix::identity(F5, 2) == a);
    CHECK(bracket(a, a).is_zero());
    CHECK(bracket(a, b) == -(bracket(b, a)));
    CHECK(a.pow(0).is_identity());
    CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("vectorize round trip") {
    Matrix a = Matrix::from_ints(Q, {{1, 2, 3}, {4, 5, 6}});
    CHECK(Matrix::unvectorize(a.vectorize(), 2, 3) == a);
}

TEST_CASE("shape and field mismatches throw") {
    Matrix a(Q, 2, 2);
    Matrix b(F3, 2, 2);
    Matrix c(Q, 3, 2);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a + c, DimensionMismatchError);
    CHECK_THROWS_AS(a * c, DimensionMismatchError);
}

#include <doctest.h>

#include "sll/field.hpp"
#include "test_helpers.hpp"

using namespace sll;
using sll::testing::TestRng;

TEST_CASE("field spec construction and parsing") {
    CHECK(FieldSpec::rationals().name() == "q");
    CHECK(FieldSpec::prime(5).name() == "gf:5");
    CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("gf:3") == FieldSpec::prime(3));
    CHECK_THROWS_AS(FieldSpec::prime(2), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(9), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("gf:2"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("r"), std::invalid_argument);
}

TEST_CASE("rational scalars are canonical") {
    Scalar half = Scalar::rational(2, 4);
    CHECK(half.str() == "1/2");
    CHECK(Scalar::rational(-2, -4).str() == "1/2");
    CHECK(Scalar::rational(2, -4).str() == "-1/2");
    CHECK(Scalar::rational(0, 7).str() == "0");
    CHECK(Scalar::rational(6, 3).str() == "2");
    CHECK(half + half == Scalar(FieldSpec::rationals(), 1));
    CHECK(half.inverse().str() == "2");
    CHECK_THROWS_AS(Scalar::rational(1, 0), std::domain_error);
}

TEST_CASE("scalar parsing") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(Scalar::parse(q, "-3/6").str() == "-1/2");
    CHECK(Scalar::parse(q, "7").str() == "7");
    CHECK_THROWS(Scalar::parse(q, "1.5"));
    CHECK_THROWS(Scalar::parse(q, ""));
    CHECK_THROWS(Scalar::parse(q, "1/0"));

    FieldSpec f5 = FieldSpec::prime(5);
    CHECK(Scalar::parse(f5, "7").str() == "2");
    CHECK(Scalar::parse(f5, "-1").str() == "4");
    CHECK(Scalar::parse(f5, "1/2").str() == "3");  // 2 * 3 = 6 = 1 mod 5
    CHECK_THROWS(Scalar::parse(f5, "1/5"));
}

TEST_CASE("prime field arithmetic stays in canonical range") {
    FieldSpec f7 = FieldSpec::prime(7);
    Scalar a(f7, 5), b(f7, 4);
    CHECK((a + b).str() == "2");
    CHECK((a - b).str() == "1");
    CHECK((b - a).str() == "6");
    CHECK((a * b).str() == "6");
    CHECK((a / b).str() == "3");  // 3 * 4 = 12 = 5 mod 7
    CHECK((-a).str() == "2");
    CHECK_THROWS_AS(Scalar(f7, 0).inverse(), std::domain_error);
}

TEST_CASE("mixing fields is rejected") {
    Scalar a(FieldSpec::prime(3), 1);
    Scalar b(FieldSpec::prime(5), 1);
    Scalar c(FieldSpec::rationals(), 1);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a * c, FieldMismatchError);
}

TEST_CASE("field axioms hold on random triples") {
    for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(13)}) {
        TestRng rng(42);
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = sll::testing::random_scalar(rng, field);
            Scalar b = sll::testing::random_scalar(rng, field);
            Scalar c = sll::testing::random_scalar(rng, field);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + Scalar::zero(field) == a);
            CHECK(a * Scalar::one(field) == a);
            CHECK(a - a == Scalar::zero(field));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(field));
            }
        }
    }
}

TEST_CASE("scalar ordering and hashing") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(Scalar::rational(1, 3).cmp(Scalar::rational(1, 2)) < 0);
    CHECK(Scalar::rational(-1, 2).cmp(Scalar::rational(1, 3)) < 0);
    CHECK(Scalar::rational(2, 4).cmp(Scalar::rational(1, 2)) == 0);
    CHECK(Scalar::rational(1, 2).hash() == Scalar::rational(2, 4).hash());

    FieldSpec f5 = FieldSpec::prime(5);
    CHECK(Scalar(f5, 2).cmp(Scalar(f5, 4)) < 0);
    CHECK(Scalar(f5, 7).hash() == Scalar(f5, 2).hash());
}

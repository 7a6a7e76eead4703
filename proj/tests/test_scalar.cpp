#include "doctest.h"
#include "support.hpp"
#include "torext/scalar.hpp"

using namespace torext;

namespace {

// independent inverse oracle: extended Euclid written from the definition
std::int64_t euclid_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    return ((s0 % p) + p) % p;
}

}  // namespace

TEST_CASE("prime field arithmetic examples") {
    Field f3 = Field::prime(3);
    Scalar two(f3, 2);
    CHECK((two + two) == Scalar(f3, 1));

    Field f7 = Field::prime(7);
    // 4/2 over F_7 against the extended-Euclid oracle
    Scalar four(f7, 4), twof7(f7, 2);
    std::int64_t expected = (4 * euclid_inverse(2, 7)) % 7;
    CHECK((four / twof7) == Scalar(f7, expected));
    CHECK((four / twof7) == Scalar(f7, 2));
}

TEST_CASE("rational arithmetic examples") {
    Scalar half = Scalar::fraction(1, 2);
    Scalar third = Scalar::fraction(1, 3);
    CHECK((half + third) == Scalar::fraction(5, 6));
    CHECK((half + third).to_string() == "5/6");
}

TEST_CASE("scalar inverse examples") {
    Field f7 = Field::prime(7);
    CHECK(Scalar(f7, 1).inverse() == Scalar(f7, 1));

    // 3 over F_7 by exhaustive search
    std::int64_t found = 0;
    for (std::int64_t c = 1; c < 7; ++c)
        if ((3 * c) % 7 == 1) found = c;
    CHECK(Scalar(f7, 3).inverse() == Scalar(f7, found));
    CHECK(found == 5);

    CHECK(Scalar::fraction(-2, 3).inverse() == Scalar::fraction(-3, 2));
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937 rng(20240601);
    for (Field field : {Field::prime(2), Field::prime(3), Field::prime(7), Field::rationals()}) {
        for (int i = 0; i < 1000; ++i) {
            Scalar a = testsupport::random_scalar(rng, field);
            Scalar b = testsupport::random_scalar(rng, field);
            Scalar c = testsupport::random_scalar(rng, field);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(field));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(field));
        }
    }
}

TEST_CASE("Fermat a^p = a exhaustively for small primes") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        Field field = Field::prime(p);
        for (std::int64_t a = 0; a < p; ++a) {
            Scalar s(field, a);
            CHECK(s.pow(static_cast<std::uint64_t>(p)) == s);
        }
    }
}

TEST_CASE("scalar errors") {
    Field f5 = Field::prime(5);
    CHECK_THROWS_AS(Scalar(f5, 0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar(f5, 1) / Scalar(f5, 0), DivisionByZero);
    CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(Field::prime(7), 1), FieldMismatch);
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Field::prime(1), Error);
    CHECK(Field::prime(2147483647).modulus() == 2147483647);  // 2^31 - 1 is prime
}

TEST_CASE("canonical form is unique") {
    Field f7 = Field::prime(7);
    CHECK(Scalar(f7, -3) == Scalar(f7, 4));
    CHECK(Scalar(f7, 10) == Scalar(f7, 3));
    CHECK(Scalar::fraction(2, 4) == Scalar::fraction(1, 2));
    CHECK(Scalar::fraction(1, -2) == Scalar::fraction(-1, 2));
    CHECK(Scalar::fraction(1, -2).to_string() == "-1/2");
    // balanced printing over F_7
    CHECK(Scalar(f7, 5).to_string() == "-2");
    CHECK(Scalar(f7, 3).to_string() == "3");
}

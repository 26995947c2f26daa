#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsx/linalg.hpp"
#include "gsx/scalar.hpp"

using namespace gsx;

TEST_CASE("rationals are stored reduced with positive denominator") {
    Field Q = Field::rationals();
    Scalar a(Q, 6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.render() == "-3/2");
    CHECK(Scalar(Q, 0, 7).render() == "0");
    CHECK(Scalar(Q, -14, -7).render() == "2");
}

TEST_CASE("rational arithmetic is exact") {
    Field Q = Field::rationals();
    Scalar a(Q, 1, 3), b(Q, 1, 6);
    CHECK((a + b) == Scalar(Q, 1, 2));
    CHECK((a - b) == Scalar(Q, 1, 6));
    CHECK((a * b) == Scalar(Q, 1, 18));
    CHECK((a / b) == Scalar(Q, 2));
    CHECK((-a).render() == "-1/3");
    CHECK_THROWS_AS(Scalar(Q, 1, 0), input_error);
    CHECK_THROWS_AS(Scalar(Q, 1).inverse() / Scalar(Q, 0), input_error);
}

TEST_CASE("rational inverse round-trip (a/b)*(b/a) = 1") {
    Field Q = Field::rationals();
    std::mt19937_64 rng(20240801);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int i = 0; i < 200; ++i) {
        long n = d(rng), den = d(rng);
        if (n == 0 || den == 0)
            continue;
        Scalar a(Q, n, den);
        CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("prime field residues stay canonical") {
    Field F5 = Field::prime(5);
    Scalar a(F5, -3);
    CHECK(a.numerator() == 2);
    CHECK(a.render() == "2");
    Scalar b(F5, 7, 3); // 7/3 = 2 * 3^{-1} = 2 * 2 = 4
    CHECK(b.render() == "4");
    CHECK((Scalar(F5, 4) + Scalar(F5, 3)).render() == "2");
    CHECK((Scalar(F5, 2) * Scalar(F5, 4)).render() == "3");
}

TEST_CASE("Fermat: r^p = r in GF(p)") {
    for (long p : {2L, 3L, 5L, 7L, 101L}) {
        Field F = Field::prime(p);
        for (long r = 0; r < std::min(p, 25L); ++r) {
            Scalar s(F, r);
            CHECK(s.pow(static_cast<unsigned long>(p)) == s);
        }
    }
}

TEST_CASE("field modulus must be prime") {
    CHECK_THROWS_AS(Field::prime(1), input_error);
    CHECK_THROWS_AS(Field::prime(4), input_error);
    CHECK_THROWS_AS(Field::prime(91), input_error); // 7*13
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(1000003));
}

TEST_CASE("mixed fields are rejected") {
    Scalar a(Field::rationals(), 1);
    Scalar b(Field::prime(5), 1);
    CHECK_THROWS_AS(a + b, input_error);
    CHECK_THROWS_AS(a * b, input_error);
    Scalar c(Field::prime(7), 1);
    CHECK_THROWS_AS(b + c, input_error);
}

TEST_CASE("scalar parsing is exact-string") {
    Field Q = Field::rationals();
    CHECK(Scalar::parse(Q, "-5/15") == Scalar(Q, -1, 3));
    CHECK(Scalar::parse(Q, "42") == Scalar(Q, 42));
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), input_error);
    CHECK_THROWS_AS(Scalar::parse(Q, "1.5"), input_error);
    CHECK_THROWS_AS(Scalar::parse(Q, ""), input_error);
    Field F5 = Field::prime(5);
    CHECK(Scalar::parse(F5, "-1").render() == "4");
    CHECK(Scalar::parse(F5, "2/3").render() == "4"); // 2 * 3^{-1} = 2*2
}

TEST_CASE("big integers do not overflow") {
    Field Q = Field::rationals();
    Scalar big = Scalar::parse(Q, "123456789012345678901234567890");
    CHECK((big * big).render() ==
          "15241578753238836750495351562536198787501905199875019052100");
}

TEST_CASE("exact row reduction and nullspace") {
    Field F5 = Field::prime(5);
    Mat m = {{Scalar(F5, 1), Scalar(F5, 2), Scalar(F5, 3)},
             {Scalar(F5, 2), Scalar(F5, 4), Scalar(F5, 2)}};
    CHECK(rank(m) == 2);
    Mat ns = nullspace(m, F5, 3);
    CHECK(ns.size() == 1);
    for (const auto& v : ns)
        CHECK(is_zero_vec(mat_vec(m, v)));

    Field Q = Field::rationals();
    Mat id = identity_mat(Q, 4);
    CHECK(rank(id) == 4);
    CHECK(nullspace(id, Q, 4).empty());
    Vec target = {Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 3), Scalar(Q, 4)};
    CHECK(in_row_span(id, target));
}

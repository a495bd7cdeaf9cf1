#include <catch2/catch_amalgamated.hpp>

#include "booklie/rational.hpp"
#include "support.hpp"

using booklie::Rational;

TEST_CASE("Rational canonical form", "[rational]") {
    CHECK(Rational(6, -4).num() == -3);
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(0, 7).num() == 0);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(-10, -5) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational parsing is exact", "[rational]") {
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-2.50") == Rational(-5, 2));
    CHECK(Rational::parse("+.5") == Rational(1, 2));
    CHECK(Rational::parse("10.") == Rational(10));
    CHECK_THROWS_AS(Rational::parse("sym"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("Rational arithmetic and powers", "[rational]") {
    const Rational a(3, 4), b(-2, 3);
    CHECK(a + b == Rational(1, 12));
    CHECK(a * b == Rational(-1, 2));
    CHECK(a / b == Rational(-9, 8));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(a.pow(3) == Rational(27, 64));
    CHECK(a.pow(-2) == Rational(16, 9));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(5).str() == "5");
}

TEST_CASE("Rational field axioms on random values", "[rational][property]") {
    booklie::test::Rng rng(20240);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = booklie::test::rand_rational(rng);
        const Rational b = booklie::test::rand_rational(rng);
        const Rational c = booklie::test::rand_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * a.inverse() == Rational(1));
        CHECK(a + (-a) == Rational(0));
        CHECK(a.den() > 0);
    }
}

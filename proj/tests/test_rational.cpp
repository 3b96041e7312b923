#include <catch2/catch_amalgamated.hpp>

#include <germforge/rational.hpp>

using germ::DomainError;
using germ::Rational;

TEST_CASE("rationals are stored canonically") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(-3, 9).str() == "-1/3");
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a.inv() == Rational(2));
    CHECK((a - a).is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(-7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(2) > Rational(3, 2));
    CHECK(Rational(1, 2) <= Rational(1, 2));
    CHECK(germ::abs(Rational(-5, 3)) == Rational(5, 3));
}

TEST_CASE("rational error cases") {
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(0).inv(), DomainError);
    CHECK_THROWS_AS(Rational::from_string("banana"), DomainError);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational::from_string("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
}

TEST_CASE("bit-size hook grows with the numbers") {
    CHECK(Rational(1).bits() == 1);
    CHECK(Rational(1024).bits() == 11);
    CHECK(Rational(1, 1024).bits() == 11);
    Rational big = Rational::from_string("340282366920938463463374607431768211456"); // 2^128
    CHECK(big.bits() == 129);
}

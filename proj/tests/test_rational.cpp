#include <catch2/catch_amalgamated.hpp>

#include "phasepath/rational.hpp"

using namespace phasepath;

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(2, 4);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);

    Rational b(-3, -6);
    CHECK(b == Rational(1, 2));

    // denominator kept positive
    Rational c(1, -3);
    CHECK(c.denominator() == 3);
    CHECK(c.numerator() == -1);

    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 3) * Rational(3, 7) == Rational(1));
    CHECK(Rational(5) / Rational(10) == Rational(1, 2));
    CHECK(-Rational(2, 5) == Rational(-2, 5));
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational pow and conversion") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(1, 3).str() == "1/3");
}

TEST_CASE("gaussian rational field ops") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.pow(4) == GaussianRational(1));

    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z * z.conj() == GaussianRational(Rational(1, 4) + Rational(9, 16)));
    CHECK(z / z == GaussianRational(1));
    CHECK((z * i) / i == z);
    CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);

    CHECK(to_complex(i) == std::complex<double>(0.0, 1.0));
}

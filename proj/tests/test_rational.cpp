#include <catch2/catch_amalgamated.hpp>

#include "fracbox/rational.hpp"

using namespace fracbox;

TEST_CASE("canonical strings shorten exact integers") {
    REQUIRE(rational_to_string(Rational(0)) == "0");
    REQUIRE(rational_to_string(Rational(7)) == "7");
    REQUIRE(rational_to_string(Rational(4) / 2) == "2");
    REQUIRE(rational_to_string(Rational(4) / 3) == "4/3");
    REQUIRE(rational_to_string(Rational(10) / 6) == "5/3");
    REQUIRE(rational_to_string(Rational(-3) / 6) == "-1/2");
}

TEST_CASE("is_integer tracks the reduced denominator") {
    REQUIRE(is_integer(Rational(5)));
    REQUIRE(is_integer(Rational(6) / 3));
    REQUIRE_FALSE(is_integer(Rational(1) / 3));
}

TEST_CASE("floor and ceil agree with the definitions") {
    const Rational five_thirds = Rational(5) / 3;
    REQUIRE(rational_floor(five_thirds) == 1);
    REQUIRE(rational_ceil(five_thirds) == 2);
    REQUIRE(rational_floor(Rational(2)) == 2);
    REQUIRE(rational_ceil(Rational(2)) == 2);
    REQUIRE(rational_floor(Rational(-5) / 3) == -2);
    REQUIRE(rational_ceil(Rational(-5) / 3) == -1);
    REQUIRE(rational_floor(Rational(0)) == 0);
    REQUIRE(rational_ceil(Rational(0)) == 0);
    // ceil(x) = -floor(-x) across a spread of values
    for (int num = -12; num <= 12; ++num)
        for (int den = 1; den <= 5; ++den) {
            const Rational r = Rational(num) / den;
            REQUIRE(rational_ceil(r) == -rational_floor(-r));
            REQUIRE(Rational(rational_floor(r)) <= r);
            REQUIRE(r <= Rational(rational_ceil(r)));
            REQUIRE(Rational(rational_ceil(r)) - Rational(rational_floor(r)) <= 1);
        }
}

TEST_CASE("fractional_part lies in the unit interval") {
    REQUIRE(fractional_part(Rational(5) / 3) == Rational(2) / 3);
    REQUIRE(fractional_part(Rational(3)) == 0);
    REQUIRE(fractional_part(Rational(-1) / 4) == Rational(3) / 4);
    for (int num = -8; num <= 8; ++num) {
        const Rational r = Rational(num) / 3;
        const Rational f = fractional_part(r);
        REQUIRE(f >= 0);
        REQUIRE(f < 1);
        REQUIRE(is_integer(r - f));
    }
}

TEST_CASE("arithmetic stays exact on large values") {
    // A sum of reciprocals that floating point cannot represent exactly.
    Rational sum = 0;
    for (int k = 1; k <= 30; ++k) sum += Rational(1) / k;
    REQUIRE(rational_to_string(sum) ==
            "9304682830147/2329089562800");
    REQUIRE(sum * Rational(2329089562800) == Rational("9304682830147"));
}

#include "doctest.h"

#include "alcove/rational.hpp"

using namespace alcove;

TEST_CASE("rational normalization and arithmetic")
{
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4) == Rat(1, -2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(3, 4) * Rat(2, 9) == Rat(1, 6));
    CHECK(Rat(3, 4) / Rat(9, 2) == Rat(1, 6));
    CHECK(Rat(7, 3).den() == 3);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("floor works for negative rationals")
{
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-4, 2).floor() == -2);
    CHECK(Rat(0).floor() == 0);
    CHECK(Rat(-1, 4).floor() == -1);
    CHECK(floor_div(-1, 4) == -1);
    CHECK(floor_div(-4, 4) == -1);
    CHECK(mod_pos(-1, 6) == 5);
}

TEST_CASE("comparisons")
{
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(2, 6) <= Rat(1, 3));
    CHECK(Rat(5, 4) > Rat(1));
}

TEST_CASE("checked integer ops trap overflow")
{
    Int big = 0x4000000000000000LL;
    CHECK_THROWS_AS(add_i(big, big), std::overflow_error);
    CHECK_THROWS_AS(mul_i(big, 4), std::overflow_error);
    CHECK_THROWS_AS((Rat(big, 1) * Rat(big, 1)), std::overflow_error);
    CHECK(add_i(big, -big) == 0);
}

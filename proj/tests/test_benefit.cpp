#include <doctest.h>

#include "gis/benefit.hpp"

using namespace gis;

TEST_CASE("benefit arithmetic is exact and ordered") {
    benefit a(7), b(-3);
    CHECK((a + b).raw() == 4);
    CHECK((a - b).raw() == 10);
    CHECK((-b).raw() == 3);
    CHECK(a > b);
    CHECK(benefit(0).zero());
    CHECK(pos_part(benefit(-5)).raw() == 0);
    CHECK(pos_part(benefit(5)).raw() == 5);
    CHECK(neg_part(benefit(-5)).raw() == -5);
    CHECK(neg_part(benefit(5)).raw() == 0);
    CHECK(max(a, b) == a);
    CHECK(min(a, b) == b);
}

TEST_CASE("overflow is detected, never silent") {
    benefit big(INT64_MAX), one(1);
    CHECK_THROWS_AS((void)(big + one), overflow_error);
    CHECK_THROWS_AS((void)(benefit(INT64_MIN) - one), overflow_error);
    CHECK_THROWS_AS((void)(-benefit(INT64_MIN)), overflow_error);
    CHECK((big + benefit(0)).raw() == INT64_MAX);
}

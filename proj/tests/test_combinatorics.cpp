#include "doctest.h"

#include <stdexcept>

#include "qgolden/combinatorics.hpp"

using namespace qgolden;

TEST_CASE("binomial basic values and conventions")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);  // b > a
    CHECK(binomial(0, -1) == 0); // b < 0
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(20, 10) == 184756);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial Pascal rule and symmetry")
{
    for (long a = 1; a <= 60; ++a)
        for (long b = 1; b <= a; ++b)
            CHECK(binomial(a, b) == binomial(a - 1, b) + binomial(a - 1, b - 1));

    for (long a = 0; a <= 60; ++a)
        for (long b = 0; b <= a; ++b)
            CHECK(binomial(a, b) == binomial(a, a - b));
}

TEST_CASE("catalan recurrence values")
{
    const long expected[] = {1, 1, 2, 5, 14, 42};
    for (long k = 0; k <= 5; ++k)
        CHECK(catalan(k) == expected[k]);
    CHECK(catalan(10) == binomial(20, 10) / 11);
    CHECK(catalan(19) == 1767263190);
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("catalan closed form values")
{
    CHECK(catalan_closed(0) == 1);
    CHECK(catalan_closed(3) == 5);
    CHECK(catalan_closed(4) == 14);
    CHECK_THROWS_AS(catalan_closed(-2), std::invalid_argument);
}

TEST_CASE("catalan recurrence agrees with closed form through k = 40")
{
    for (long k = 0; k <= 40; ++k)
        CHECK(catalan(k) == catalan_closed(k));
}

TEST_CASE("fibonacci under F_0 = F_1 = 1")
{
    CHECK(fibonacci(0) == 1);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(5) == 8);
    CHECK(fibonacci(10) == 89);
    CHECK_THROWS_AS(fibonacci(-1), std::invalid_argument);

    for (long n = 2; n <= 300; ++n)
        CHECK(fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2));
}

#include <doctest.h>

#include "compcount/count.hpp"
#include "compcount/errors.hpp"
#include "compcount/oracle.hpp"

using namespace compcount;

TEST_CASE("binomial convention") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(-1, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), NegativeUpperIndex);
    CHECK_THROWS_AS(binomial(-3, 2), NegativeUpperIndex);
}

TEST_CASE("binomial satisfies Pascal's rule") {
    for (std::int64_t a = 1; a <= 60; ++a)
        for (std::int64_t b = 0; b <= a; ++b) CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("binomial stays exact beyond 64 bits") {
    // C(100, 50) = 100891344545564193334812497256
    CHECK(binomial(100, 50) == Count("100891344545564193334812497256"));
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(7) == 13);
    CHECK_THROWS_AS(fibonacci(0), DomainError);
    CHECK_THROWS_AS(fibonacci(-4), DomainError);
    Count prev = 1, cur = 1;
    for (std::int64_t i = 3; i <= 100; ++i) {
        Count next = prev + cur;
        prev = cur;
        cur = next;
        CHECK(fibonacci(i) == cur);
    }
}

TEST_CASE("k-step fibonacci") {
    CHECK(kstep_fibonacci(2, 6) == 8);
    CHECK(kstep_fibonacci(3, 5) == 7);
    CHECK(kstep_fibonacci(2, 1) == 1);
    CHECK(kstep_fibonacci(3, 2) == 1);
    CHECK_THROWS_AS(kstep_fibonacci(1, 4), DomainError);
    CHECK_THROWS_AS(kstep_fibonacci(3, 0), DomainError);

    for (std::int64_t i = 1; i <= 60; ++i) CHECK(fibonacci(i) == kstep_fibonacci(2, i));
}

TEST_CASE("k-step fibonacci counts compositions with bounded parts") {
    for (std::int64_t k = 2; k <= 5; ++k)
        for (std::int64_t i = 0; i <= 20; ++i)
            CHECK(kstep_fibonacci(k, i + 1) == oracle::count_compositions_brute(i, PartAlphabet::up_to(k)));
}

TEST_CASE("power of two and digit counts") {
    CHECK(power_of_two(0) == 1);
    CHECK(power_of_two(64) == Count("18446744073709551616"));
    CHECK_THROWS_AS(power_of_two(-1), DomainError);
    CHECK(decimal_digits(Count(0)) == 1);
    CHECK(decimal_digits(Count(-999)) == 3);
    CHECK(decimal_digits(power_of_two(10)) == 4);
}

#include <doctest.h>

#include "compcount/polynomial.hpp"

using namespace compcount;

TEST_CASE("normalization and degree") {
    CHECK(IntPolynomial().is_zero());
    CHECK(IntPolynomial({0, 0}).is_zero());
    CHECK(IntPolynomial({0, 0}).degree() == -1);
    CHECK(IntPolynomial({1, 2, 0}).degree() == 1);
    CHECK(IntPolynomial().to_string() == "0");
    CHECK(IntPolynomial({3, 0, -1}).to_string() == "3 0 -1");
}

TEST_CASE("arithmetic") {
    const IntPolynomial x = IntPolynomial::variable();
    const IntPolynomial one = IntPolynomial::constant(1);
    const auto sq = (x - one) * (x + one);
    CHECK(sq == IntPolynomial({-1, 0, 1}));
    CHECK(sq - sq == IntPolynomial());
    CHECK((sq * SignedCount(-2)).coefficient(0) == 2);
    CHECK(sq.coefficient(17) == 0);
    CHECK((x * IntPolynomial()).is_zero());
}

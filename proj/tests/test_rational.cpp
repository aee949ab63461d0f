#include "hilbert_alloc/error.hpp"
#include "hilbert_alloc/rational.hpp"

#include <doctest.h>

using hilbert_alloc::Error;
using hilbert_alloc::ExactRational;

TEST_CASE("rationals are kept in lowest terms")
{
    const ExactRational r(4, -6);
    CHECK(r.numerator() == -2);
    CHECK(r.denominator() == 3);
    CHECK(r.to_string() == "-2/3");
    CHECK(ExactRational(6, 3).to_string() == "2");
}

TEST_CASE("parse and print")
{
    CHECK(ExactRational::parse("1/4") == ExactRational(1, 4));
    CHECK(ExactRational::parse(" 1304/3 ") == ExactRational(1304, 3));
    CHECK(ExactRational::parse("-7") == ExactRational(-7));
    CHECK(ExactRational::parse("2/4").to_string() == "1/2");
    CHECK(ExactRational(1304, 3).to_mixed_string() == "434 2/3");
    CHECK(ExactRational(1, 3).to_mixed_string() == "0 1/3");
    CHECK(ExactRational(322).to_mixed_string() == "322");
    CHECK_THROWS_AS(ExactRational::parse("1/0"), Error);
    CHECK_THROWS_AS(ExactRational::parse("a/3"), Error);
    CHECK_THROWS_AS(ExactRational::parse("1/-3"), Error);
    CHECK_THROWS_AS(ExactRational::parse(""), Error);
}

TEST_CASE("arithmetic is exact")
{
    const ExactRational third(1, 3);
    CHECK(third + third + third == ExactRational(1));
    CHECK(third * ExactRational(3) == ExactRational(1));
    CHECK(ExactRational(1) - third == ExactRational(2, 3));
    CHECK(ExactRational(1) / third == ExactRational(3));
    CHECK(third < ExactRational(1, 2));
    CHECK(-third < ExactRational(0));
    CHECK_THROWS_AS(third / ExactRational(0), Error);
}

TEST_CASE("string round trip is exact for large values")
{
    const ExactRational big = ExactRational::parse("123456789012345678901234567890/7");
    CHECK(ExactRational::parse(big.to_string()) == big);
}

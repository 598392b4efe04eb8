#include "sumtot/errors.hpp"
#include "sumtot/rational.hpp"

#include <doctest.h>

#include <random>

using sumtot::Rational;

TEST_CASE("rational normalizes sign and gcd")
{
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), sumtot::DomainError);
}

TEST_CASE("rational parses exact decimals and fractions")
{
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("0.1") == Rational(1, 10));
    CHECK_THROWS_AS(Rational::parse("1e3"), sumtot::PreconditionError);
    CHECK_THROWS_AS(Rational::parse("abc"), sumtot::PreconditionError);
    CHECK_THROWS_AS(Rational::parse(""), sumtot::PreconditionError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), sumtot::PreconditionError);
}

TEST_CASE("rational arithmetic agrees with cross-multiplication")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational x(a, b), y(c, d);
        CHECK(x + y == Rational(a * d + c * b, b * d));
        CHECK(x * y == Rational(a * c, b * d));
        CHECK(((x < y) == (a * d < c * b)));
        CHECK(Rational::parse((x - y).to_string()) == x - y);
    }
}

TEST_CASE("rational overflow is reported")
{
    const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
    CHECK_THROWS_AS(big * big, sumtot::OverflowError);
}

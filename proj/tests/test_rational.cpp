#include <doctest.h>

#include <sstream>

#include "eulersum/error.hpp"
#include "eulersum/rational.hpp"
#include "oracles.hpp"
#include "random_values.hpp"

using namespace eulersum;

TEST_CASE("binomial examples") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == oracle::pascal_binomial(5, 2));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 7) == 0);
}

TEST_CASE("binomial matches Pascal's triangle") {
    for (std::size_t n = 0; n <= 40; ++n) {
        const auto row = oracle::pascal_row(n);
        for (std::size_t k = 0; k <= n + 2; ++k) {
            CHECK(binomial(n, k) == (k <= n ? row[k] : BigInt(0)));
        }
    }
}

TEST_CASE("rationals are canonical") {
    CHECK(Rational(BigInt(6), BigInt(-8)).to_string() == "-3/4");
    CHECK(Rational(BigInt(0), BigInt(-5)).denominator() == 1);
    CHECK(Rational(BigInt(10), BigInt(5)).to_string() == "2");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("text form") {
    CHECK(Rational::parse("-3/4") == Rational(BigInt(-3), BigInt(4)));
    CHECK(Rational::parse("4/8").to_string() == "1/2");
    CHECK(Rational::parse("7").to_string() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/"), DomainError);

    CHECK(Rational::from_decimal("0.25").to_string() == "1/4");
    CHECK(Rational::from_decimal("-0.5").to_string() == "-1/2");
    CHECK(Rational::from_decimal("1e-3").to_string() == "1/1000");
    CHECK(Rational::from_decimal("2.5E2").to_string() == "250");
    CHECK(Rational::from_decimal(".5").to_string() == "1/2");
    CHECK_THROWS_AS(Rational::from_decimal("."), DomainError);
    CHECK_THROWS_AS(Rational::from_decimal("1e"), DomainError);
    CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), DomainError);

    CHECK(Rational::from_string("5/7") == Rational(BigInt(5), BigInt(7)));
    CHECK(Rational::from_string("-2") == Rational(-2));

    std::ostringstream os;
    os << Rational(BigInt(-1), BigInt(2));
    CHECK(os.str() == "-1/2");
}

TEST_CASE("pow") {
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(BigInt(-2), BigInt(3)).pow(3).to_string() == "-8/27");
    CHECK(Rational(BigInt(2), BigInt(3)).pow(-2).to_string() == "9/4");
    CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("property: field laws hold exactly and results stay reduced") {
    testing::RationalGenerator gen(0x5eed);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = gen.next();
        const Rational b = gen.next();
        const Rational c = gen.next();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Rational(0));
        for (const Rational& r : {a + b, a - b, a * b, a * (b + c)}) CHECK(testing::in_lowest_terms(r));
        if (!b.is_zero()) {
            CHECK(testing::in_lowest_terms(a / b));
            CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("property: text form round-trips") {
    testing::RationalGenerator gen(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = gen.next(1000000);
        CHECK(Rational::parse(a.to_string()) == a);
    }
}

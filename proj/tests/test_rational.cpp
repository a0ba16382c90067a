#include <catch2/catch_amalgamated.hpp>

#include <cocompact/rational.hpp>

using cocompact::ext_rational;
using cocompact::rational;

TEST_CASE("rational arithmetic is exact") {
    rational a(1, 3), b(1, 6);
    CHECK(a + b == rational(1, 2));
    CHECK(a - b == rational(1, 6));
    CHECK(a * b == rational(1, 18));
    CHECK(a / b == rational(2));
    CHECK(-a == rational(-1, 3));
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-3, -6) == rational(1, 2));
}

TEST_CASE("rational parsing and formatting") {
    CHECK(rational::parse("3/4") == rational(3, 4));
    CHECK(rational::parse("-3/4") == rational(-3, 4));
    CHECK(rational::parse("7") == rational(7));
    CHECK(rational::parse("6/4").str() == "3/2");
    CHECK(rational(5).str() == "5");
    CHECK_THROWS_AS(rational::parse("x"), cocompact::invalid_input);
    CHECK_THROWS_AS(rational::parse("1/0"), cocompact::invalid_input);
    CHECK_THROWS_AS(rational::parse(""), cocompact::invalid_input);
}

TEST_CASE("pow2 handles negative exponents") {
    CHECK(rational::pow2(0) == rational(1));
    CHECK(rational::pow2(6) == rational(64));
    CHECK(rational::pow2(-4) == rational(1, 16));
}

TEST_CASE("floor_div computes grid indices") {
    CHECK(rational(7, 2).floor_div(rational(1, 2)) == 7);
    CHECK(rational(-1, 4).floor_div(rational(1, 2)) == -1);
    CHECK(rational(0).floor_div(rational(1, 8)) == 0);
    CHECK(rational(5, 8).floor_div(rational(1, 4)) == 2);
}

TEST_CASE("ext_rational orders finite values below infinity") {
    const ext_rational inf = ext_rational::infinity();
    CHECK(ext_rational(rational(5)) < inf);
    CHECK(inf == ext_rational::infinity());
    CHECK_FALSE(inf < inf);
    CHECK(ext_rational(rational(1, 2)) < ext_rational(rational(2, 3)));
    CHECK(inf.str() == "inf");
}

TEST_CASE("large values do not overflow") {
    rational big(1LL << 40, 3);
    CHECK((big * big).str() == std::string("1208925819614629174706176/9"));
}

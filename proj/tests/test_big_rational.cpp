#include <catch2/catch_amalgamated.hpp>

#include <nonacycle/big_rational.hpp>
#include <nonacycle/errors.hpp>

using nonacycle::big_rational;
using nonacycle::division_by_zero;
using nonacycle::syntax_error;

TEST_CASE("construction is canonical") {
    CHECK(big_rational(2, 4).to_string() == "1/2");
    CHECK(big_rational(1, -2).to_string() == "-1/2");
    CHECK(big_rational(-4, -6).to_string() == "2/3");
    CHECK(big_rational(0, 7).to_string() == "0");
    CHECK(big_rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(big_rational(1, 0), division_by_zero);
}

TEST_CASE("arithmetic") {
    const big_rational half(1, 2), third(1, 3);
    CHECK(half + third == big_rational(5, 6));
    CHECK(half - third == big_rational(1, 6));
    CHECK(half * third == big_rational(1, 6));
    CHECK(half / third == big_rational(3, 2));
    CHECK(-half == big_rational(-1, 2));
    CHECK_THROWS_AS(half / big_rational(0), division_by_zero);

    big_rational acc(0);
    for (int i = 0; i < 10; ++i) acc += big_rational(1, 3);
    CHECK(acc == big_rational(10, 3));
}

TEST_CASE("parsing accepts p and p/q only") {
    CHECK(big_rational::from_string("42") == big_rational(42));
    CHECK(big_rational::from_string("-7") == big_rational(-7));
    CHECK(big_rational::from_string("4/6") == big_rational(2, 3));
    CHECK(big_rational::from_string("-4715/4088") == big_rational(-4715, 4088));
    CHECK_THROWS_AS(big_rational::from_string(""), syntax_error);
    CHECK_THROWS_AS(big_rational::from_string("+3"), syntax_error);
    CHECK_THROWS_AS(big_rational::from_string("1.5"), syntax_error);
    CHECK_THROWS_AS(big_rational::from_string("1/2/3"), syntax_error);
    CHECK_THROWS_AS(big_rational::from_string("t"), syntax_error);
    CHECK_THROWS_AS(big_rational::from_string("1/-2"), syntax_error);
    CHECK_THROWS_AS(big_rational::from_string("3/0"), division_by_zero);
}

TEST_CASE("rendering round-trips") {
    const char* samples[] = {"0", "1", "-1", "13979/4715", "-4088/4715", "123456789012345678901/7"};
    for (const char* s : samples) CHECK(big_rational::from_string(s).to_string() == s);
}

TEST_CASE("predicates and conversion") {
    CHECK(big_rational(0).is_zero());
    CHECK(big_rational(1).is_one());
    CHECK(big_rational(6, 3).is_integer());
    CHECK_FALSE(big_rational(1, 3).is_integer());
    CHECK(big_rational(-5, 3).sign() == -1);
    CHECK(big_rational(1, 2).to_double() == 0.5);
    CHECK(big_rational(1, 3) < big_rational(1, 2));
    CHECK(abs(big_rational(-3, 4)) == big_rational(3, 4));
}

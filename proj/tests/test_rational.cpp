#include "djp/rational.hpp"

#include "doctest.h"

#include <sstream>

using djp::Rational;

TEST_CASE("construction keeps lowest terms with positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts p and p/q and rejects junk") {
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("+4/6") == Rational(2, 3));
    CHECK(Rational::parse("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", " 1", "1 "})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("str-parse round trip") {
    for (long p = -9; p <= 9; ++p)
        for (long q = 1; q <= 9; ++q) {
            Rational r(p, q);
            CHECK(Rational::parse(r.str()) == r);
        }
}

TEST_CASE("field arithmetic") {
    Rational a(3, 4), b(-2, 3);
    CHECK(a + b == Rational(1, 12));
    CHECK(a - b == Rational(17, 12));
    CHECK(a * b == Rational(-1, 2));
    CHECK(a / b == Rational(-9, 8));
    CHECK(-a == Rational(-3, 4));
    CHECK(a.inv() == Rational(4, 3));
    CHECK(a * a.inv() == Rational(1));
    CHECK_THROWS_AS(Rational(0).inv(), std::invalid_argument);
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(7, 7).is_one());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(6, 3).is_integer());
    CHECK(!Rational(2, 3).is_integer());
    CHECK(Rational(-5, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(5).sign() == 1);
}

TEST_CASE("factorial, binomial, raising factorial") {
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::binom(6, 2) == Rational(15));
    CHECK(Rational::binom(3, 5) == Rational(0));
    // (t)_k = t (t+1) ... (t+k-1)
    CHECK(djp::raising_factorial(Rational(1), 4) == Rational(24));
    CHECK(djp::raising_factorial(Rational(2), 3) == Rational(24));
    CHECK(djp::raising_factorial(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(djp::raising_factorial(Rational(7), 0) == Rational(1));
}

TEST_CASE("stream output") {
    std::ostringstream os;
    os << Rational(-7, 3);
    CHECK(os.str() == "-7/3");
}

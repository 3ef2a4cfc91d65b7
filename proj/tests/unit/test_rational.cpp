#include <doctest.h>

#include <random>
#include <sstream>

#include <enriques/rational.hpp>

using enriques::Rational;

TEST_CASE("parse and print are inverse") {
    for (const char* s : {"0", "1", "-7", "8/3", "-61/20", "123456789012345678901234567890/11"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("+5").str() == "5");
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK(Rational::parse("-3/6").str() == "-1/2");
}

TEST_CASE("malformed text is rejected") {
    for (const char* s : {"", "/", "1/", "/2", "1.5", "a", "1/0", "1//2", " 1", "--1", "3/-6"}) {
        CHECK_THROWS_AS(Rational::parse(s), std::invalid_argument);
    }
}

TEST_CASE("field arithmetic") {
    const Rational a(1, 6), b(-3, 4);
    CHECK(a + b == Rational(-7, 12));
    CHECK(a - b == Rational(11, 12));
    CHECK(a * b == Rational(-1, 8));
    CHECK(a / b == Rational(-2, 9));
    CHECK(-a == Rational(-1, 6));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    Rational acc(1);
    acc.add_product(Rational(2, 3), Rational(9, 4));
    CHECK(acc == Rational(5, 2));
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-3, 5).sign() == -1);
    CHECK(Rational().is_zero());
}

TEST_CASE("powers, factorials, binomials") {
    CHECK(Rational::pow(Rational(-2), 3) == Rational(-8));
    CHECK(Rational::pow(Rational(-2), -3) == Rational(-1, 8));
    CHECK(Rational::pow(Rational(5, 7), 0) == Rational(1));
    CHECK_THROWS(Rational::pow(Rational(0), -1));
    CHECK(enriques::factorial(0) == Rational(1));
    CHECK(enriques::factorial(10) == Rational(3628800));
    CHECK(enriques::binomial(10, 3) == Rational(120));
    CHECK(enriques::binomial(3, 5) == Rational(0));
    CHECK(enriques::binomial(3, -1) == Rational(0));
}

TEST_CASE("random round trips and identities") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000), den(1, 100000);
    for (int i = 0; i < 500; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK(Rational::parse(a.str()) == a);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        std::ostringstream os;
        os << a;
        CHECK(os.str() == a.str());
    }
}

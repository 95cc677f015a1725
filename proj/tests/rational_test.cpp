#include "doctest.h"
#include "minforest/errors.hpp"
#include "minforest/rational.hpp"

using minforest::DomainError;
using minforest::ExtRational;
using minforest::Rational;

TEST_CASE("rationals reduce and normalize the sign") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 2).den() == 2);
    CHECK(Rational(6, -4).num() == -3);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    Rational sum;
    for (int i = 0; i < 100; ++i) sum += Rational(1, 100);
    CHECK(sum == Rational(1));
    // denominators that would overflow a naive int64 product
    Rational a(1, 3037000499LL);
    CHECK(a + a == Rational(2, 3037000499LL));
}

TEST_CASE("rational ordering is total and matches cross-multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(4, 2) <= Rational(2));
    CHECK(Rational(1000000007, 2) < Rational(1000000009, 2));
}

TEST_CASE("rational strings round-trip") {
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational::parse("7").value() == Rational(7));
    CHECK(Rational::parse("-3/2").value() == Rational(-3, 2));
    CHECK(Rational::parse("6/4").value() == Rational(3, 2));
    CHECK_FALSE(Rational::parse("1.5").has_value());
    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("two").has_value());
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("extended rationals treat infinity as the empty minimum") {
    ExtRational inf = ExtRational::infinity();
    CHECK_FALSE(inf.is_finite());
    CHECK(inf.str() == "inf");
    CHECK(ExtRational(Rational(3)) < inf);
    CHECK(inf > ExtRational(1000000));
    CHECK(inf == ExtRational::infinity());
    CHECK(inf + ExtRational(5) == inf);
    CHECK(inf - ExtRational(5) == inf);
    CHECK_THROWS_AS(ExtRational(1) - inf, DomainError);
    CHECK_THROWS_AS((void)inf.finite(), DomainError);
    CHECK(ExtRational(Rational(1, 2)) + ExtRational(Rational(1, 2)) == ExtRational(1));
    CHECK(ExtRational(3).finite() == Rational(3));
}

#include <doctest.h>

#include "test_support.hpp"

using namespace frusta;

TEST_CASE("rationals store reduced form with positive denominator") {
  const Rational r(6, 8);
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 4);
  const Rational n(3, -6);
  CHECK(n.numerator() == -1);
  CHECK(n.denominator() == 2);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3) == Rational(1));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(-5, 3) < Rational(-1, 3));
  CHECK(Rational(2, 3) > Rational(3, 5));
}

TEST_CASE("parse and render round-trip") {
  for (const char* text : {"0", "1", "-1", "2/3", "-7/12", "305000/3", "101"}) {
    const Rational r = Rational::parse(text);
    CHECK(r.str() == text);
  }
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse("1 / 2"), Error);
}

TEST_CASE("parse(render(r)) = r for random reduced fractions") {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    const Rational r(dist(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("fixed-point decimals round half away from zero") {
  CHECK(Rational(1, 2).decimal(6) == "0.500000");
  CHECK(Rational(305000, 3).decimal(6) == "101666.666667");
  CHECK(Rational(-1, 3).decimal(3) == "-0.333");
  CHECK(Rational(5, 2).decimal(0) == "3");
  CHECK(Rational(0).decimal(2) == "0.00");
}

TEST_CASE("significant-digit rendering keeps integers clean") {
  CHECK(Rational(0).decimal_significant(12) == "0");
  CHECK(Rational(1).decimal_significant(12) == "1");
  CHECK(Rational(-2).decimal_significant(12) == "-2");
  CHECK(Rational(1, 2).decimal_significant(12) == "0.5");
  CHECK(Rational(1, 3).decimal_significant(12) == "0.333333333333");
  CHECK(Rational(305000, 3).decimal_significant(4) == "101700");
  CHECK(Rational(1, 300).decimal_significant(3) == "0.00333");
}

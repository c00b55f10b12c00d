#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inls/rational.hpp"

#include <random>

using inls::Rational;

TEST_CASE("arithmetic stays reduced and exact") {
  Rational a(2, 4);
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
  CHECK(Rational(3, 4) * Rational(8, 9) == Rational(2, 3));
  CHECK(Rational(5, 6) / Rational(5, 3) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
}

TEST_CASE("division by zero is an error, never a value") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(Rational(inls::BigInt(1), inls::BigInt(0)), std::domain_error);
}

TEST_CASE("infinity orders above every finite value and inverts to zero") {
  const Rational inf = Rational::infinity();
  CHECK(inf.is_infinite());
  CHECK(inf > Rational(1'000'000'000LL));
  CHECK(Rational(-5) < inf);
  CHECK(inf == Rational::infinity());
  CHECK(inf.reciprocal() == Rational(0));
  CHECK(inf + Rational(3) == inf);
  CHECK(Rational(2) * inf == inf);
  CHECK(Rational(7, 3) / inf == Rational(0));
  CHECK_THROWS_AS(Rational(1) - inf, std::domain_error);
  CHECK_THROWS_AS(-inf, std::domain_error);
  CHECK_THROWS_AS(Rational(0) * inf, std::domain_error);
}

TEST_CASE("string form is canonical and round-trips") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(9).str() == "9");
  CHECK(Rational::infinity().str() == "inf");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("inf").is_infinite());
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_FALSE(Rational::try_parse("2.5").has_value());

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-5000, 5000);
  std::uniform_int_distribution<long long> den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    Rational x(num(rng), den(rng));
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("comparison is a total order consistent with cross-multiplication") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-300, 300);
  std::uniform_int_distribution<long long> den(1, 300);
  for (int i = 0; i < 500; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    const double ad = a.to_double(), bd = b.to_double();
    if (ad < bd - 1e-9) CHECK(a < b);
    if (ad > bd + 1e-9) CHECK(a > b);
    CHECK((a < b || a == b || a > b));
  }
}

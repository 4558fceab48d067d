#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/rational.hpp"

using ghcloud::BigInt;
using ghcloud::Error;
using ghcloud::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  const int64_t num = static_cast<int64_t>(rng() % 2001) - 1000;
  const int64_t den = 1 + static_cast<int64_t>(rng() % 50);
  return Rational(num, den);
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(-6, -4).to_string() == "3/2");
  CHECK(Rational(0, 17).to_string() == "0");
  CHECK(Rational(12, 3).to_string() == "4");
  CHECK(Rational(7, 1).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse("3/0"), Error);
  CHECK_THROWS_AS(Rational::parse("3/-2"), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Rational r = random_rational(rng);
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("field properties on random values") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    Rational c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
  }
}

TEST_CASE("ordering is consistent with subtraction sign") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    CHECK((a < b) == ((a - b).sign() < 0));
    CHECK((a == b) == (a - b).is_zero());
  }
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("powers") {
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2, 3), 0) == Rational(1));
  CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(Rational::pow(Rational(2), 10) == Rational(1024));
  CHECK_THROWS_AS(Rational::pow(Rational(0), -1), Error);
}

TEST_CASE("abs min max") {
  CHECK(Rational(-3, 2).abs() == Rational(3, 2));
  CHECK(ghcloud::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(ghcloud::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
}

#include <doctest.h>

#include <numeric>

#include "core/error.hpp"
#include "core/stabilizer.hpp"

using namespace ghcloud;

TEST_CASE("gcd of q-power minus one") {
  CHECK(gcd_qpow(2, 4, 6) == BigInt(3));
  CHECK(gcd_qpow(3, 2, 3) == BigInt(2));
  CHECK(gcd_qpow(5, 7, 7) == BigInt::pow(BigInt(5), 7) - BigInt(1));
  // the call cross-checks the closed form against Euclid internally;
  // sweep a small grid to exercise that assertion
  for (int64_t q = 2; q <= 5; ++q)
    for (uint64_t n = 1; n <= 12; ++n)
      for (uint64_t m = 1; m <= 12; ++m)
        CHECK(gcd_qpow(q, n, m) ==
              BigInt::pow(BigInt(q), std::gcd(n, m)) - BigInt(1));
  CHECK_THROWS_AS(gcd_qpow(1, 2, 3), Error);
  CHECK_THROWS_AS(gcd_qpow(2, 0, 3), Error);
}

TEST_CASE("repunit") {
  CHECK(repunit(7, 1, 3) == BigInt(1));
  CHECK(repunit(2, 3, 2) == BigInt(21));
  CHECK(repunit(3, 2, 1) == BigInt(4));
  for (int64_t q = 2; q <= 4; ++q)
    for (uint64_t r = 1; r <= 6; ++r)
      for (uint64_t d = 1; d <= 4; ++d)
        CHECK(repunit(q, r, d) * (BigInt::pow(BigInt(q), d) - BigInt(1)) ==
              BigInt::pow(BigInt(q), r * d) - BigInt(1));
}

TEST_CASE("coprime power equation") {
  auto [a1, a2] = solve_eq3(2, 4, 6);
  CHECK(a1 == BigInt(21));
  CHECK(a2 == BigInt(5));
  CHECK(a1 * BigInt(15) == a2 * BigInt(63));

  auto same = solve_eq3(5, 9, 9);
  CHECK(same.first == BigInt(1));
  CHECK(same.second == BigInt(1));

  auto third = solve_eq3(3, 2, 4);
  CHECK(third.first == BigInt(10));
  CHECK(third.second == BigInt(1));
  CHECK(third.first * BigInt(8) == third.second * BigInt(80));

  for (int64_t q = 2; q <= 4; ++q)
    for (uint64_t n = 1; n <= 10; ++n)
      for (uint64_t m = 1; m <= 10; ++m) {
        auto [x1, x2] = solve_eq3(q, n, m);
        CHECK(x1 * (BigInt::pow(BigInt(q), n) - BigInt(1)) ==
              x2 * (BigInt::pow(BigInt(q), m) - BigInt(1)));
        CHECK(BigInt::gcd(x1, x2) == BigInt(1));
      }
}

TEST_CASE("power membership") {
  CHECK(stabilizer_member(Rational(8), 2) == 3);
  CHECK(stabilizer_member(Rational(1), 2) == 0);
  CHECK(stabilizer_member(Rational(1), 7) == 0);
  CHECK(stabilizer_member(Rational(1, 8), 2) == -3);
  CHECK(stabilizer_member(Rational(243), 3) == 5);
  CHECK_FALSE(stabilizer_member(Rational(3, 2), 2).has_value());
  CHECK_FALSE(stabilizer_member(Rational(6), 2).has_value());
  CHECK_FALSE(stabilizer_member(Rational(2, 3), 3).has_value());
  CHECK_THROWS_AS(stabilizer_member(Rational(8), 1), Error);
  CHECK_THROWS_AS(stabilizer_member(Rational(0), 2), Error);
  CHECK_THROWS_AS(stabilizer_member(Rational(-8), 2), Error);
}

TEST_CASE("membership is a multiplicative group, not an additive one") {
  for (int64_t q : {2, 3, 5}) {
    for (int64_t a = -4; a <= 4; ++a)
      for (int64_t b = -4; b <= 4; ++b) {
        Rational lam = Rational::pow(Rational(q), a);
        Rational mu = Rational::pow(Rational(q), b);
        CHECK(stabilizer_member(lam * mu, q) == a + b);
        CHECK(stabilizer_member(lam.reciprocal(), q) == -a);
      }
  }
  // 1 + 1 = 2 leaves the group for q = 3
  CHECK_FALSE(stabilizer_member(Rational(2), 3).has_value());
}

TEST_CASE("canonical form decomposition") {
  // pure powers decompose with unit ratio
  for (int64_t alpha = -5; alpha <= 5; ++alpha) {
    auto f = form9_decompose(Rational::pow(Rational(2), alpha), 2, 8);
    REQUIRE(f.has_value());
    CHECK(f->alpha == alpha);
    CHECK(f->d == 1);
    CHECK(f->r1 == 1);
    CHECK(f->r2 == 1);
  }

  auto five = form9_decompose(Rational(5), 2, 8);
  REQUIRE(five.has_value());
  CHECK(*five == Form9{0, 2, 1, 2});  // (2^4 - 1)/(2^2 - 1) = 5

  CHECK_FALSE(form9_decompose(Rational(4, 7), 3, 10).has_value());

  // determinism: repeated calls give the identical decomposition
  auto again = form9_decompose(Rational(5), 2, 8);
  CHECK(*again == *five);

  // members always decompose with r1 == r2
  for (int64_t alpha = -3; alpha <= 3; ++alpha)
    for (int64_t q : {2, 3}) {
      Rational lam = Rational::pow(Rational(q), alpha);
      REQUIRE(stabilizer_member(lam, q).has_value());
      auto f = form9_decompose(lam, q, 12);
      REQUIRE(f.has_value());
      CHECK(f->r1 == f->r2);
    }
}

TEST_CASE("squares of the ratio shape") {
  SquareForm9Report trivial = square_form9_test(2, 3, 3, 20);
  CHECK(trivial.lambda_is_one);
  CHECK(trivial.lambda_is_one_required);
  CHECK_FALSE(trivial.counterexample.has_value());
  CHECK(trivial.lambda == Rational(1));

  SquareForm9Report fifteen = square_form9_test(2, 4, 2, 30);
  CHECK_FALSE(fifteen.lambda_is_one);
  CHECK(fifteen.lambda_is_one_required);
  CHECK_FALSE(fifteen.counterexample.has_value());
  CHECK(fifteen.lambda == Rational(5));

  SquareForm9Report thirteen = square_form9_test(3, 3, 1, 24);
  CHECK(thirteen.lambda == Rational(13));
  CHECK(thirteen.lambda_is_one_required);
  CHECK_FALSE(thirteen.counterexample.has_value());
}

TEST_CASE("non-member of ratio shape has no bounded square representation") {
  // lambda = 5 = (2^4 - 1)/(2^2 - 1): not a power of 2, ratio r1 != r2
  CHECK_FALSE(stabilizer_member(Rational(5), 2).has_value());
  auto f = form9_decompose(Rational(5), 2, 16);
  REQUIRE(f.has_value());
  CHECK(f->r1 != f->r2);
  SquareForm9Report sq = square_form9_test(2, f->r2 * f->d, f->r1 * f->d, 40);
  CHECK_FALSE(sq.counterexample.has_value());
  CHECK(sq.lambda_is_one_required);
}

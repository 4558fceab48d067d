#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "core/bigint.hpp"
#include "core/rational.hpp"

namespace ghcloud {

// Exact number theory of similarity coefficients for geometric sequence
// spaces with integer base q >= 2. Everything here is bounded search over
// arbitrary-precision integers; "not found" results are certified only
// within the stated exponent bound.

// q^gcd(n,m) - 1, cross-checked against the Euclidean gcd of q^n - 1 and
// q^m - 1 on every call. Throws BadBase for q < 2.
BigInt gcd_qpow(int64_t q, uint64_t n, uint64_t m);

// 1 + q^d + q^(2d) + ... + q^((r-1)d)  ==  (q^(rd) - 1) / (q^d - 1)
BigInt repunit(int64_t q, uint64_t r, uint64_t d);

// The coprime positive solution (a1, a2) of a1 (q^n - 1) = a2 (q^m - 1).
std::pair<BigInt, BigInt> solve_eq3(int64_t q, uint64_t n, uint64_t m);

// lambda = q^alpha * (q^(r2 d) - 1) / (q^(r1 d) - 1) with gcd(r1, r2) = 1.
struct Form9 {
  int64_t alpha;
  uint64_t d;
  uint64_t r1;
  uint64_t r2;
  bool operator==(const Form9&) const = default;
};

// Smallest decomposition in lexicographic (d, r2, r1, alpha) order with
// |alpha| <= bound and r1 d, r2 d <= bound, or nullopt if none exists
// within the bound.
std::optional<Form9> form9_decompose(const Rational& lambda, int64_t q,
                                     uint64_t bound);

inline constexpr uint64_t kDefaultForm9Bound = 64;

// Decides whether lambda is an exact integer power of q, returning the
// exponent. This is the full membership test for rational coefficients
// that keep a geometric sequence space in its cloud.
std::optional<int64_t> stabilizer_member(const Rational& lambda, int64_t q);

// For lambda = (q^n - 1)/(q^m - 1), searches k > l with k <= bound such
// that lambda^2 = (q^k - 1)/(q^l - 1). For n != m no such pair exists, so
// a square of this shape forces lambda = 1.
struct SquareForm9Report {
  Rational lambda;
  bool lambda_is_one;        // n == m, the trivial solution
  bool lambda_is_one_required;  // no bounded counterexample found
  std::optional<std::pair<uint64_t, uint64_t>> counterexample;
};

SquareForm9Report square_form9_test(int64_t q, uint64_t n, uint64_t m,
                                    uint64_t bound);

}  // namespace ghcloud

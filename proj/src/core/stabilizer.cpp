#include "core/stabilizer.hpp"

#include <numeric>
#include <stdexcept>

#include "core/error.hpp"

namespace ghcloud {

namespace {

void require_base(int64_t q) {
  if (q < 2)
    throw Error(ErrorKind::BadBase,
                "base must be an integer >= 2, got " + std::to_string(q));
}

// exact exponent e with value == q^e, if any (value >= 1)
std::optional<uint64_t> exact_log(const BigInt& value, const BigInt& q) {
  BigInt cur = value;
  uint64_t e = 0;
  while (cur > BigInt(1)) {
    BigInt quo, rem;
    BigInt::divmod(cur, q, quo, rem);
    if (!rem.is_zero()) return std::nullopt;
    cur = std::move(quo);
    ++e;
  }
  return cur == BigInt(1) ? std::optional<uint64_t>(e) : std::nullopt;
}

}  // namespace

BigInt gcd_qpow(int64_t q, uint64_t n, uint64_t m) {
  require_base(q);
  if (n == 0 || m == 0)
    throw Error(ErrorKind::BadArgument, "exponents must be positive");
  const BigInt base(q);
  const uint64_t g = std::gcd(n, m);
  BigInt closed = BigInt::pow(base, g) - BigInt(1);
  BigInt direct = BigInt::gcd(BigInt::pow(base, n) - BigInt(1),
                              BigInt::pow(base, m) - BigInt(1));
  if (closed != direct)
    throw std::logic_error("gcd_qpow: closed form disagrees with Euclid at q=" +
                           std::to_string(q) + " n=" + std::to_string(n) +
                           " m=" + std::to_string(m));
  return closed;
}

BigInt repunit(int64_t q, uint64_t r, uint64_t d) {
  require_base(q);
  if (r == 0 || d == 0)
    throw Error(ErrorKind::BadArgument, "repunit orders must be positive");
  const BigInt step = BigInt::pow(BigInt(q), d);
  BigInt sum(1);
  BigInt term(1);
  for (uint64_t i = 1; i < r; ++i) {
    term *= step;
    sum += term;
  }
  return sum;
}

std::pair<BigInt, BigInt> solve_eq3(int64_t q, uint64_t n, uint64_t m) {
  require_base(q);
  if (n == 0 || m == 0)
    throw Error(ErrorKind::BadArgument, "exponents must be positive");
  const uint64_t d = std::gcd(n, m);
  return {repunit(q, m / d, d), repunit(q, n / d, d)};
}

std::optional<int64_t> stabilizer_member(const Rational& lambda, int64_t q) {
  require_base(q);
  if (lambda.sign() <= 0)
    throw Error(ErrorKind::BadArgument,
                "coefficient must be positive, got " + lambda.to_string());
  const BigInt base(q);
  if (lambda.den() == BigInt(1)) {
    if (auto e = exact_log(lambda.num(), base))
      return static_cast<int64_t>(*e);
    return std::nullopt;
  }
  if (lambda.num() == BigInt(1)) {
    if (auto e = exact_log(lambda.den(), base))
      return -static_cast<int64_t>(*e);
  }
  return std::nullopt;
}

std::optional<Form9> form9_decompose(const Rational& lambda, int64_t q,
                                     uint64_t bound) {
  require_base(q);
  if (bound == 0) throw Error(ErrorKind::BadArgument, "bound must be positive");
  if (lambda.sign() <= 0)
    throw Error(ErrorKind::BadArgument,
                "coefficient must be positive, got " + lambda.to_string());
  const BigInt base(q);
  for (uint64_t d = 1; d <= bound; ++d) {
    for (uint64_t r2 = 1; r2 * d <= bound; ++r2) {
      const Rational ratio_den(BigInt::pow(base, r2 * d) - BigInt(1));
      for (uint64_t r1 = 1; r1 * d <= bound; ++r1) {
        if (std::gcd(r1, r2) != 1) continue;
        // lambda must equal q^alpha * (q^(r2 d)-1)/(q^(r1 d)-1);
        // peel the ratio off and test for an exact power of q
        Rational residue =
            lambda * Rational(BigInt::pow(base, r1 * d) - BigInt(1)) / ratio_den;
        std::optional<int64_t> alpha;
        if (residue.den() == BigInt(1)) {
          if (auto e = exact_log(residue.num(), base))
            alpha = static_cast<int64_t>(*e);
        } else if (residue.num() == BigInt(1)) {
          if (auto e = exact_log(residue.den(), base))
            alpha = -static_cast<int64_t>(*e);
        }
        if (alpha && static_cast<uint64_t>(*alpha < 0 ? -*alpha : *alpha) <= bound)
          return Form9{*alpha, d, r1, r2};
      }
    }
  }
  return std::nullopt;
}

SquareForm9Report square_form9_test(int64_t q, uint64_t n, uint64_t m,
                                    uint64_t bound) {
  require_base(q);
  if (n == 0 || m == 0)
    throw Error(ErrorKind::BadArgument, "exponents must be positive");
  const BigInt base(q);
  Rational lambda(BigInt::pow(base, n) - BigInt(1),
                  BigInt::pow(base, m) - BigInt(1));
  const Rational square = lambda * lambda;

  SquareForm9Report report;
  report.lambda = lambda;
  report.lambda_is_one = n == m;
  std::vector<BigInt> pw(static_cast<size_t>(bound) + 1);
  pw[0] = BigInt(1);
  for (uint64_t i = 1; i <= bound; ++i) pw[static_cast<size_t>(i)] = pw[static_cast<size_t>(i) - 1] * base;
  for (uint64_t k = 2; k <= bound && !report.counterexample; ++k)
    for (uint64_t l = 1; l < k; ++l) {
      Rational candidate(pw[static_cast<size_t>(k)] - BigInt(1),
                         pw[static_cast<size_t>(l)] - BigInt(1));
      if (candidate == square) {
        report.counterexample = std::make_pair(k, l);
        break;
      }
    }
  report.lambda_is_one_required = report.lambda_is_one || !report.counterexample;
  return report;
}

}  // namespace ghcloud

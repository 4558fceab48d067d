#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/metric_space.hpp"
#include "core/rational.hpp"

namespace ghcloud {

// Exponent function for geometric sequences: integer-valued, strictly
// increasing, with phi(n) >= n (1-indexed).
class Phi {
 public:
  static Phi identity();
  static Phi square();
  static Phi custom(std::vector<int64_t> values);  // values[0] = phi(1)

  // "id", "square", or a semicolon list like "2;5;9"
  static Phi parse(std::string_view s);

  int64_t operator()(int n) const;
  int max_index() const;  // INT_MAX for closed forms, list length otherwise
  bool gaps_strictly_increasing(int upto) const;
  std::string describe() const;

 private:
  enum class Kind { Identity, Square, Custom };
  Kind kind_ = Kind::Identity;
  std::vector<int64_t> values_;
};

// Strictly increasing subset of the real line, generated on demand:
// geometric q^phi(n) (q > 1 rational), prime powers p^n, or an explicit
// list; all elements carry a positive rational coefficient.
class SequenceSpace {
 public:
  enum class Kind { Geometric, PrimePower, Explicit };

  static SequenceSpace geometric(Rational q, Phi phi);
  static SequenceSpace prime_power(int64_t p);
  static SequenceSpace explicit_list(std::vector<Rational> values);

  // Mini-language: "geom:q=2,phi=square", "prime:3", "scale:2*geom:q=2",
  // "list:1,2,5". The scale prefix multiplies the coefficient.
  static SequenceSpace parse(std::string_view spec);

  SequenceSpace scaled(const Rational& coeff) const;

  Kind kind() const { return kind_; }
  const Rational& coefficient() const { return coefficient_; }
  const Rational& q() const { return q_; }
  const Phi& phi() const { return phi_; }

  int max_index() const;  // window limit for explicit lists

  Rational element(int n) const;  // 1-indexed
  std::vector<Rational> elements(int count) const;
  MetricSpace truncation(int count) const;

  std::string describe() const;

 private:
  SequenceSpace() = default;

  Kind kind_ = Kind::Explicit;
  Rational coefficient_ = Rational(1);
  Rational q_ = Rational(0);
  Phi phi_;
  std::vector<Rational> values_;  // Explicit only
};

bool is_prime(int64_t p);

}  // namespace ghcloud

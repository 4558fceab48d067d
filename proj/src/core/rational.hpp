#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "core/bigint.hpp"

namespace ghcloud {

// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);
  Rational(int64_t num, int64_t den) : Rational(BigInt(num), BigInt(den)) {}

  // "p", "-p", "p/q"
  static Rational parse(std::string_view s);
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational abs() const;
  Rational reciprocal() const;  // throws on zero

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  static Rational pow(const Rational& base, int64_t exp);

  std::strong_ordering operator<=>(const Rational& rhs) const;
  bool operator==(const Rational& rhs) const = default;

  double to_double() const;  // lossy, diagnostics only

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace ghcloud

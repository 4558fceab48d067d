#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ghcloud {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs
// (little-endian, no leading zero limbs; zero is the empty limb vector).
// Sized for this project's workloads (a few thousand bits at most), so all
// algorithms are schoolbook; division is Knuth's algorithm D.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int64_t v);  // NOLINT(google-explicit-constructor)

  // Parses an optionally signed decimal string. Throws Error(ParseError)
  // on anything else.
  static BigInt parse(std::string_view s);

  std::string to_string() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  bool fits_int64() const;
  int64_t to_int64() const;  // throws Error(TooLarge) if out of range
  bool fits_uint64() const;
  uint64_t to_uint64() const;

  size_t bit_length() const;  // 0 for zero

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator/=(const BigInt& rhs);  // truncated toward zero
  BigInt& operator%=(const BigInt& rhs);  // remainder has dividend's sign

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  // quotient truncated toward zero, |remainder| < |divisor|
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quo, BigInt& rem);

  static BigInt gcd(const BigInt& a, const BigInt& b);  // always >= 0
  static BigInt pow(const BigInt& base, uint64_t exp);

  std::strong_ordering operator<=>(const BigInt& rhs) const;
  bool operator==(const BigInt& rhs) const = default;

 private:
  void trim();
  static int compare_magnitude(const std::vector<uint32_t>& a,
                               const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_magnitude(const std::vector<uint32_t>& a,
                                             const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_magnitude(const std::vector<uint32_t>& a,
                                             const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_magnitude(const std::vector<uint32_t>& a,
                                             const std::vector<uint32_t>& b);
  static void divmod_magnitude(const std::vector<uint32_t>& u,
                               const std::vector<uint32_t>& v,
                               std::vector<uint32_t>& quo,
                               std::vector<uint32_t>& rem);

  std::vector<uint32_t> limbs_;
  bool negative_ = false;
};

}  // namespace ghcloud

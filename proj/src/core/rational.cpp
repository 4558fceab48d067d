#include "core/rational.hpp"

#include <cstdlib>
#include <utility>

#include "core/error.hpp"

namespace ghcloud {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw Error(ErrorKind::BadArgument, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::parse(s));
  BigInt num = BigInt::parse(s.substr(0, slash));
  std::string_view den_part = s.substr(slash + 1);
  if (!den_part.empty() && (den_part[0] == '-' || den_part[0] == '+'))
    throw Error(ErrorKind::ParseError,
                "denominator must be unsigned: " + std::string(s));
  BigInt den = BigInt::parse(den_part);
  if (den.is_zero())
    throw Error(ErrorKind::ParseError, "zero denominator: " + std::string(s));
  return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::abs() const {
  Rational out = *this;
  out.num_ = out.num_.abs();
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::BadArgument, "reciprocal of zero");
  Rational out;
  out.num_ = den_;
  out.den_ = num_;
  if (out.den_.is_negative()) {
    out.num_ = -out.num_;
    out.den_ = -out.den_;
  }
  return out;  // already coprime
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::BadArgument, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::pow(const Rational& base, int64_t exp) {
  if (exp == 0) return Rational(1);
  const bool invert = exp < 0;
  const uint64_t mag =
      invert ? ~static_cast<uint64_t>(exp) + 1 : static_cast<uint64_t>(exp);
  const Rational b = invert ? base.reciprocal() : base;
  Rational out;
  // num/den stay coprime under powering, no renormalization needed
  out.num_ = BigInt::pow(b.num_, mag);
  out.den_ = BigInt::pow(b.den_, mag);
  return out;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  return num_ * rhs.den_ <=> rhs.num_ * den_;
}

double Rational::to_double() const {
  double n = std::strtod(num_.to_string().c_str(), nullptr);
  double d = std::strtod(den_.to_string().c_str(), nullptr);
  return n / d;
}

}  // namespace ghcloud

#include "core/sequence_space.hpp"

#include <climits>

#include "core/error.hpp"

namespace ghcloud {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

Phi Phi::identity() { return Phi(); }

Phi Phi::square() {
  Phi p;
  p.kind_ = Kind::Square;
  return p;
}

Phi Phi::custom(std::vector<int64_t> values) {
  if (values.empty())
    throw Error(ErrorKind::BadArgument, "empty exponent list");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < static_cast<int64_t>(i) + 1)
      throw Error(ErrorKind::BadArgument,
                  "exponent function must satisfy phi(n) >= n, phi(" +
                      std::to_string(i + 1) + ") = " +
                      std::to_string(values[i]));
    if (i > 0 && values[i] <= values[i - 1])
      throw Error(ErrorKind::BadArgument,
                  "exponent function must be strictly increasing at index " +
                      std::to_string(i + 1));
  }
  Phi p;
  p.kind_ = Kind::Custom;
  p.values_ = std::move(values);
  return p;
}

Phi Phi::parse(std::string_view s) {
  if (s == "id") return identity();
  if (s == "square") return square();
  std::vector<int64_t> values;
  for (auto part : split(s, ';')) {
    try {
      values.push_back(BigInt::parse(part).to_int64());
    } catch (const Error&) {
      throw Error(ErrorKind::ParseError,
                  "exponent function must be 'id', 'square', or a "
                  "semicolon-separated integer list, got '" +
                      std::string(s) + "'");
    }
  }
  return custom(std::move(values));
}

int64_t Phi::operator()(int n) const {
  if (n < 1) throw Error(ErrorKind::BadArgument, "sequence index must be >= 1");
  switch (kind_) {
    case Kind::Identity:
      return n;
    case Kind::Square:
      return static_cast<int64_t>(n) * n;
    case Kind::Custom:
      if (n > static_cast<int>(values_.size()))
        throw Error(ErrorKind::BadWindow,
                    "exponent list has " + std::to_string(values_.size()) +
                        " entries, index " + std::to_string(n) + " requested");
      return values_[static_cast<size_t>(n) - 1];
  }
  return n;
}

int Phi::max_index() const {
  return kind_ == Kind::Custom ? static_cast<int>(values_.size()) : INT_MAX;
}

bool Phi::gaps_strictly_increasing(int upto) const {
  for (int n = 1; n + 2 <= upto; ++n)
    if ((*this)(n + 2) - (*this)(n + 1) <= (*this)(n + 1) - (*this)(n))
      return false;
  return true;
}

std::string Phi::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "id";
    case Kind::Square:
      return "square";
    case Kind::Custom: {
      std::string out;
      for (size_t i = 0; i < values_.size(); ++i) {
        if (i) out.push_back(';');
        out += std::to_string(values_[i]);
      }
      return out;
    }
  }
  return "id";
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

SequenceSpace SequenceSpace::geometric(Rational q, Phi phi) {
  if (!(q > Rational(1)))
    throw Error(ErrorKind::BadArgument,
                "geometric base must satisfy q > 1, got " + q.to_string());
  SequenceSpace s;
  s.kind_ = Kind::Geometric;
  s.q_ = std::move(q);
  s.phi_ = std::move(phi);
  return s;
}

SequenceSpace SequenceSpace::prime_power(int64_t p) {
  if (!is_prime(p))
    throw Error(ErrorKind::BadArgument,
                std::to_string(p) + " is not prime");
  SequenceSpace s;
  s.kind_ = Kind::PrimePower;
  s.q_ = Rational(p);
  s.phi_ = Phi::identity();
  return s;
}

SequenceSpace SequenceSpace::explicit_list(std::vector<Rational> values) {
  if (values.empty())
    throw Error(ErrorKind::BadArgument, "empty sequence");
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (!(values[i] < values[i + 1]))
      throw Error(ErrorKind::NotStrictlyIncreasing,
                  "sequence not strictly increasing at index " +
                      std::to_string(i + 1),
                  static_cast<int>(i));
  SequenceSpace s;
  s.kind_ = Kind::Explicit;
  s.values_ = std::move(values);
  return s;
}

SequenceSpace SequenceSpace::parse(std::string_view spec) {
  if (spec.starts_with("scale:")) {
    std::string_view rest = spec.substr(6);
    size_t star = rest.find('*');
    if (star == std::string_view::npos)
      throw Error(ErrorKind::ParseError,
                  "scale spec must look like scale:<coeff>*<spec>");
    Rational coeff = Rational::parse(rest.substr(0, star));
    if (coeff.sign() <= 0)
      throw Error(ErrorKind::NonPositiveLambda,
                  "scale coefficient must be positive");
    return parse(rest.substr(star + 1)).scaled(coeff);
  }
  if (spec.starts_with("prime:")) {
    std::string_view rest = spec.substr(6);
    return prime_power(BigInt::parse(rest).to_int64());
  }
  if (spec.starts_with("geom:")) {
    std::string_view rest = spec.substr(5);
    Rational q;
    bool have_q = false;
    Phi phi = Phi::identity();
    for (auto part : split(rest, ',')) {
      if (part.starts_with("q=")) {
        q = Rational::parse(part.substr(2));
        have_q = true;
      } else if (part.starts_with("phi=")) {
        phi = Phi::parse(part.substr(4));
      } else {
        throw Error(ErrorKind::ParseError,
                    "unknown geometric parameter '" + std::string(part) + "'");
      }
    }
    if (!have_q)
      throw Error(ErrorKind::ParseError, "geometric spec requires q=<rational>");
    return geometric(std::move(q), std::move(phi));
  }
  if (spec.starts_with("list:")) {
    std::vector<Rational> values;
    for (auto part : split(spec.substr(5), ','))
      values.push_back(Rational::parse(part));
    return explicit_list(std::move(values));
  }
  throw Error(ErrorKind::ParseError,
              "unknown sequence spec '" + std::string(spec) +
                  "'; expected geom:, prime:, list:, or scale:");
}

SequenceSpace SequenceSpace::scaled(const Rational& coeff) const {
  if (coeff.sign() <= 0)
    throw Error(ErrorKind::NonPositiveLambda,
                "scale coefficient must be positive");
  SequenceSpace out = *this;
  out.coefficient_ = coefficient_ * coeff;
  return out;
}

int SequenceSpace::max_index() const {
  if (kind_ == Kind::Explicit) return static_cast<int>(values_.size());
  return phi_.max_index();
}

Rational SequenceSpace::element(int n) const {
  if (n < 1) throw Error(ErrorKind::BadArgument, "sequence index must be >= 1");
  if (kind_ == Kind::Explicit) {
    if (n > static_cast<int>(values_.size()))
      throw Error(ErrorKind::BadWindow,
                  "sequence has " + std::to_string(values_.size()) +
                      " elements, index " + std::to_string(n) + " requested");
    return coefficient_ * values_[static_cast<size_t>(n) - 1];
  }
  return coefficient_ * Rational::pow(q_, phi_(n));
}

std::vector<Rational> SequenceSpace::elements(int count) const {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(count));
  for (int n = 1; n <= count; ++n) out.push_back(element(n));
  return out;
}

MetricSpace SequenceSpace::truncation(int count) const {
  auto xs = elements(count);
  return MetricSpace::from_points(xs);
}

std::string SequenceSpace::describe() const {
  std::string base;
  switch (kind_) {
    case Kind::Geometric:
      base = "geom:q=" + q_.to_string() + ",phi=" + phi_.describe();
      break;
    case Kind::PrimePower:
      base = "prime:" + q_.to_string();
      break;
    case Kind::Explicit: {
      base = "list:";
      for (size_t i = 0; i < values_.size(); ++i) {
        if (i) base.push_back(',');
        base += values_[i].to_string();
      }
      break;
    }
  }
  if (coefficient_ == Rational(1)) return base;
  return "scale:" + coefficient_.to_string() + "*" + base;
}

}  // namespace ghcloud

#include "core/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "core/error.hpp"

namespace ghcloud {

namespace {
constexpr uint64_t kBase = uint64_t{1} << 32;
constexpr uint32_t kDecChunk = 1000000000u;  // 10^9 < 2^32
}  // namespace

BigInt::BigInt(int64_t v) {
  negative_ = v < 0;
  // avoid overflow for INT64_MIN
  uint64_t mag = negative_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  if (mag != 0) limbs_.push_back(static_cast<uint32_t>(mag));
  if (mag >> 32) limbs_.push_back(static_cast<uint32_t>(mag >> 32));
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::parse(std::string_view s) {
  size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size())
    throw Error(ErrorKind::ParseError, "empty integer literal");
  BigInt out;
  BigInt chunk_scale;
  size_t i = pos;
  while (i < s.size()) {
    size_t len = std::min<size_t>(9, s.size() - i);
    uint32_t chunk = 0;
    for (size_t k = 0; k < len; ++k) {
      char c = s[i + k];
      if (c < '0' || c > '9')
        throw Error(ErrorKind::ParseError,
                    "invalid integer literal: " + std::string(s));
      chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
    }
    uint64_t scale = 1;
    for (size_t k = 0; k < len; ++k) scale *= 10;
    out *= BigInt(static_cast<int64_t>(scale));
    out += BigInt(static_cast<int64_t>(chunk));
    i += len;
  }
  out.negative_ = neg && !out.limbs_.empty();
  return out;
}

std::string BigInt::to_string() const {
  if (limbs_.empty()) return "0";
  std::vector<uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    uint64_t rem = 0;
    for (size_t i = mag.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<uint32_t>(cur / kDecChunk);
      rem = cur % kDecChunk;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool BigInt::fits_uint64() const { return !negative_ && limbs_.size() <= 2; }

uint64_t BigInt::to_uint64() const {
  if (!fits_uint64()) throw Error(ErrorKind::TooLarge, "integer exceeds 64 bits");
  uint64_t v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
  return v;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  uint64_t mag = (uint64_t{limbs_[1]} << 32) | limbs_[0];
  return negative_ ? mag <= (uint64_t{1} << 63) : mag < (uint64_t{1} << 63);
}

int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw Error(ErrorKind::TooLarge, "integer exceeds 64 bits");
  uint64_t mag = 0;
  for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  return negative_ ? -static_cast<int64_t>(mag) : static_cast<int64_t>(mag);
}

size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  return 32 * (limbs_.size() - 1) +
         (32 - static_cast<size_t>(std::countl_zero(limbs_.back())));
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.limbs_.empty()) out.negative_ = !out.negative_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.negative_ = false;
  return out;
}

int BigInt::compare_magnitude(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_magnitude(const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<uint32_t> out(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out[i] = static_cast<uint32_t>(sum);
    carry = sum >> 32;
  }
  out[hi.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::sub_magnitude(const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b) {
  assert(compare_magnitude(a, b) >= 0);
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t diff = static_cast<int64_t>(a[i]) - borrow -
                   (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(diff);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_magnitude(const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    out[i + b.size()] = static_cast<uint32_t>(carry);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth algorithm D (Hacker's Delight divmnu flavor). Requires v.size() >= 2
// and |u| >= |v|; the single-limb case is handled by the caller.
void BigInt::divmod_magnitude(const std::vector<uint32_t>& u,
                              const std::vector<uint32_t>& v,
                              std::vector<uint32_t>& quo,
                              std::vector<uint32_t>& rem) {
  const size_t n = v.size();
  const size_t m = u.size() - n;
  const int s = std::countl_zero(v.back());

  std::vector<uint32_t> vn(n), un(u.size() + 1, 0);
  if (s == 0) {
    vn = v;
    std::copy(u.begin(), u.end(), un.begin());
  } else {
    for (size_t i = n; i-- > 1;)
      vn[i] = (v[i] << s) | (v[i - 1] >> (32 - s));
    vn[0] = v[0] << s;
    un[u.size()] = u.back() >> (32 - s);
    for (size_t i = u.size(); i-- > 1;)
      un[i] = (u[i] << s) | (u[i - 1] >> (32 - s));
    un[0] = u[0] << s;
  }

  quo.assign(m + 1, 0);
  for (size_t jj = m + 1; jj-- > 0;) {
    const size_t j = jj;
    uint64_t num = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    uint64_t qhat = num / vn[n - 1];
    uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }

    int64_t t = 0;
    int64_t k = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * vn[i];
      t = static_cast<int64_t>(un[i + j]) - k -
          static_cast<int64_t>(p & 0xffffffffull);
      un[i + j] = static_cast<uint32_t>(t);
      k = static_cast<int64_t>(p >> 32) - (t >> 32);
    }
    t = static_cast<int64_t>(un[j + n]) - k;
    un[j + n] = static_cast<uint32_t>(t);

    quo[j] = static_cast<uint32_t>(qhat);
    if (t < 0) {  // qhat was one too large; add divisor back
      --quo[j];
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t sum = static_cast<uint64_t>(un[i + j]) + vn[i] + carry;
        un[i + j] = static_cast<uint32_t>(sum);
        carry = sum >> 32;
      }
      un[j + n] = static_cast<uint32_t>(un[j + n] + carry);
    }
  }

  rem.assign(n, 0);
  if (s == 0) {
    std::copy(un.begin(), un.begin() + static_cast<ptrdiff_t>(n), rem.begin());
  } else {
    for (size_t i = 0; i + 1 < n; ++i)
      rem[i] = (un[i] >> s) | (un[i + 1] << (32 - s));
    rem[n - 1] = un[n - 1] >> s;
  }
  while (!quo.empty() && quo.back() == 0) quo.pop_back();
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quo, BigInt& rem) {
  if (b.is_zero()) throw Error(ErrorKind::BadArgument, "division by zero");
  int cmp = compare_magnitude(a.limbs_, b.limbs_);
  if (cmp < 0) {
    quo = BigInt();
    rem = a;
    return;
  }
  std::vector<uint32_t> q, r;
  if (b.limbs_.size() == 1) {
    const uint64_t d = b.limbs_[0];
    q.assign(a.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      uint64_t cur = (carry << 32) | a.limbs_[i];
      q[i] = static_cast<uint32_t>(cur / d);
      carry = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (carry != 0) r.push_back(static_cast<uint32_t>(carry));
  } else {
    divmod_magnitude(a.limbs_, b.limbs_, q, r);
  }
  BigInt qout, rout;
  qout.limbs_ = std::move(q);
  qout.negative_ = a.negative_ != b.negative_;
  qout.trim();
  rout.limbs_ = std::move(r);
  rout.negative_ = a.negative_;
  rout.trim();
  quo = std::move(qout);
  rem = std::move(rout);
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    limbs_ = add_magnitude(limbs_, rhs.limbs_);
  } else {
    int cmp = compare_magnitude(limbs_, rhs.limbs_);
    if (cmp >= 0) {
      limbs_ = sub_magnitude(limbs_, rhs.limbs_);
    } else {
      limbs_ = sub_magnitude(rhs.limbs_, limbs_);
      negative_ = rhs.negative_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  BigInt neg = -rhs;
  return *this += neg;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  negative_ = negative_ != rhs.negative_;
  limbs_ = mul_magnitude(limbs_, rhs.limbs_);
  trim();
  return *this;
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  *this = std::move(q);
  return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  *this = std::move(r);
  return *this;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  // fast path below two limbs each
  if (a.limbs_.size() <= 2 && b.limbs_.size() <= 2) {
    uint64_t x = a.abs().to_uint64();
    uint64_t y = b.abs().to_uint64();
    while (y != 0) {
      uint64_t t = x % y;
      x = y;
      y = t;
    }
    BigInt out;
    if (x != 0) {
      out.limbs_.push_back(static_cast<uint32_t>(x));
      if (x >> 32) out.limbs_.push_back(static_cast<uint32_t>(x >> 32));
    }
    return out;
  }
  BigInt x = a.abs();
  BigInt y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt BigInt::pow(const BigInt& base, uint64_t exp) {
  BigInt result(1);
  BigInt acc = base;
  while (exp != 0) {
    if (exp & 1) result *= acc;
    exp >>= 1;
    if (exp != 0) acc *= acc;
  }
  return result;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  int ls = sign(), rs = rhs.sign();
  if (ls != rs) return ls <=> rs;
  int cmp = compare_magnitude(limbs_, rhs.limbs_);
  if (ls < 0) cmp = -cmp;
  return cmp <=> 0;
}

}  // namespace ghcloud

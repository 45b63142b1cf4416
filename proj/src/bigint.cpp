#include "holo/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace holo {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  while (m) {
    mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

int BigInt::cmp_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
  const auto& a = x.size() >= y.size() ? x : y;
  const auto& b = x.size() >= y.size() ? y : x;
  std::vector<uint32_t> r;
  r.reserve(a.size() + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0);
    r.push_back(static_cast<uint32_t>(s));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<uint32_t>(carry));
  return r;
}

// requires |x| >= |y|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
  std::vector<uint32_t> r;
  r.reserve(x.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    int64_t d = static_cast<int64_t>(x[i]) - borrow - (i < y.size() ? y[i] : 0);
    if (d < 0) {
      d += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<uint32_t>(d));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<uint32_t> r(x.size() + y.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < y.size(); ++j) {
      uint64_t cur = r[i + j] + carry + static_cast<uint64_t>(x[i]) * y[j];
      r[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + y.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == o.sign_) {
    r.mag_ = add_mag(mag_, o.mag_);
    r.sign_ = sign_;
  } else {
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = sub_mag(mag_, o.mag_);
      r.sign_ = sign_;
    } else {
      r.mag_ = sub_mag(o.mag_, mag_);
      r.sign_ = o.sign_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  if (sign_ == 0 || o.sign_ == 0) return r;
  r.mag_ = mul_mag(mag_, o.mag_);
  r.sign_ = sign_ * o.sign_;
  r.trim();
  return r;
}

bool BigInt::operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }

bool BigInt::operator<(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_;
  int c = cmp_mag(mag_, o.mag_);
  return sign_ >= 0 ? c < 0 : c > 0;
}

void BigInt::shr1() {
  uint32_t carry = 0;
  for (size_t i = mag_.size(); i-- > 0;) {
    uint32_t cur = mag_[i];
    mag_[i] = (cur >> 1) | (carry << 31);
    carry = cur & 1;
  }
  trim();
}

bool BigInt::even() const { return mag_.empty() || (mag_[0] & 1) == 0; }

BigInt BigInt::gcd(BigInt x, BigInt y) {
  x.sign_ = x.mag_.empty() ? 0 : 1;
  y.sign_ = y.mag_.empty() ? 0 : 1;
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int shift = 0;
  while (x.even() && y.even()) {
    x.shr1();
    y.shr1();
    ++shift;
  }
  while (x.even()) x.shr1();
  while (!y.is_zero()) {
    while (y.even()) y.shr1();
    if (cmp_mag(x.mag_, y.mag_) > 0) std::swap(x.mag_, y.mag_);
    y.mag_ = sub_mag(y.mag_, x.mag_);
    y.trim();
    if (y.mag_.empty()) y.sign_ = 0;
  }
  for (int i = 0; i < shift; ++i) x.mag_ = add_mag(x.mag_, x.mag_);
  x.trim();
  return x;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

int BigInt::bit_length() const {
  if (mag_.empty()) return -1;
  uint32_t top = mag_.back();
  int bits = 0;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return static_cast<int>((mag_.size() - 1) * 32) + bits;
}

double BigInt::to_double() const {
  if (sign_ == 0) return 0.0;
  // Use the top 64 bits and scale; exact for values below 2^53.
  double v = 0.0;
  size_t n = mag_.size();
  size_t take = n > 3 ? 3 : n;
  for (size_t i = 0; i < take; ++i) v = v * 4294967296.0 + mag_[n - 1 - i];
  v = std::ldexp(v, static_cast<int>((n - take) * 32));
  return sign_ < 0 ? -v : v;
}

uint32_t BigInt::divmod_small(uint32_t d) {
  uint64_t rem = 0;
  for (size_t i = mag_.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | mag_[i];
    mag_[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<uint32_t>(rem);
}

void BigInt::mul_add_small(uint32_t m, uint32_t add) {
  uint64_t carry = add;
  for (size_t i = 0; i < mag_.size(); ++i) {
    uint64_t cur = static_cast<uint64_t>(mag_[i]) * m + carry;
    mag_[i] = static_cast<uint32_t>(cur);
    carry = cur >> 32;
  }
  while (carry) {
    mag_.push_back(static_cast<uint32_t>(carry));
    carry >>= 32;
  }
  if (!mag_.empty() && sign_ == 0) sign_ = 1;
  trim();
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  BigInt tmp = *this;
  std::string digits;
  while (!tmp.mag_.empty()) {
    uint32_t rem = tmp.divmod_small(1000000000u);
    bool last = tmp.mag_.empty();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
      if (last && rem == 0 && tmp.mag_.empty()) break;
    }
    if (last) break;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

BigInt BigInt::from_string(std::string_view s) {
  BigInt r;
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("empty integer literal");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal");
    r.mul_add_small(10, static_cast<uint32_t>(s[i] - '0'));
  }
  if (!r.mag_.empty()) r.sign_ = sign;
  return r;
}

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void Rational::normalize() {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_.abs(), den_);
  if (!g.is_one()) {
    // Exact division by the gcd via subtract-and-shift.
    auto exact_div = [](const BigInt& x, const BigInt& d) {
      BigInt rem = x.abs();
      BigInt quot(0);
      while (!(rem < d)) {
        BigInt shifted = d;
        BigInt mult(1);
        while (true) {
          BigInt next = shifted + shifted;
          if (rem < next) break;
          shifted = next;
          mult = mult + mult;
        }
        rem = rem - shifted;
        quot = quot + mult;
      }
      return x.is_negative() ? -quot : quot;
    };
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_.is_zero()) throw std::invalid_argument("division by zero rational");
  return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const { return (num_ * o.den_) < (o.num_ * den_); }

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

}  // namespace holo

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace holo {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
// Only the operations the exact angle algebra needs: ring arithmetic,
// comparison, gcd, decimal io, double conversion.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;

  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;

  static BigInt gcd(BigInt x, BigInt y);

  BigInt abs() const;
  double to_double() const;
  std::string to_string() const;

  // Exponent of the most significant bit, -1 for zero.
  int bit_length() const;

 private:
  int sign_ = 0;                   // -1, 0, +1
  std::vector<uint32_t> mag_;      // little-endian, no leading zero limbs

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y);
  void shr1();
  bool even() const;
  uint32_t divmod_small(uint32_t d);  // in place, returns remainder
  void mul_add_small(uint32_t m, uint32_t add);
};

// Exact rational number; denominator kept positive, always reduced.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);
  Rational(BigInt n, BigInt d);

  static Rational from_string(std::string_view s);  // "p" or "p/q"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_integer() const { return den_.is_one(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  double to_double() const;
  std::string to_string() const;

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace holo

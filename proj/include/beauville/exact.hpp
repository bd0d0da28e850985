#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace beauville {

// Arbitrary-precision signed integer, base 2^32 little-endian limbs.
// Sizes here stay tiny (group orders up to ~2^150), so schoolbook
// arithmetic is all we need.
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t v);
  static BigInt from_string(const std::string& decimal);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt operator+(const BigInt&) const;
  BigInt operator-(const BigInt&) const;
  BigInt operator*(const BigInt&) const;
  BigInt operator/(const BigInt&) const;  // truncated toward zero
  BigInt operator%(const BigInt&) const;  // sign follows dividend

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  bool operator==(const BigInt&) const;
  std::strong_ordering operator<=>(const BigInt&) const;

  bool fits_u64() const;
  std::uint64_t to_u64() const;  // requires fits_u64 and non-negative

  std::string to_string() const;

  static BigInt gcd(BigInt a, BigInt b);
  static BigInt factorial(unsigned n);
  static BigInt pow2(unsigned n);

private:
  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // no leading zeros; empty means 0

  void trim();
  static int cmp_mag(const BigInt&, const BigInt&);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
  static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
};

// Exact rational with positive denominator, always in lowest terms.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const;

  Rational operator-() const;
  Rational operator+(const Rational&) const;
  Rational operator-(const Rational&) const;
  Rational operator*(const Rational&) const;
  Rational operator/(const Rational&) const;  // divisor must be nonzero

  bool operator==(const Rational&) const;
  std::strong_ordering operator<=>(const Rational&) const;

  std::string to_string() const;  // "p" or "p/q"

private:
  BigInt num_, den_;
  void normalize();
};

// Element of Q(sqrt5): value a + b*sqrt(5). Equality is exact; for the
// crystallographic groups b stays 0 throughout.
class ExactScalar {
public:
  ExactScalar() = default;
  ExactScalar(std::int64_t v) : a_(v) {}
  ExactScalar(Rational a) : a_(std::move(a)) {}
  ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static ExactScalar sqrt5() { return ExactScalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar&) const;
  ExactScalar operator-(const ExactScalar&) const;
  ExactScalar operator*(const ExactScalar&) const;
  ExactScalar operator/(const ExactScalar&) const;  // divisor must be nonzero

  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  bool operator==(const ExactScalar&) const;

  std::string to_string() const;

private:
  Rational a_, b_;
};

}  // namespace beauville

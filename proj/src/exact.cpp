#include "beauville/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace beauville {

// ---------------------------------------------------------------- BigInt

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  std::uint64_t m = negative_ ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  while (m) {
    limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt r;
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty literal");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  r.negative_ = neg && !r.limbs_.empty();
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

// a - b, requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    borrow = 0;
    if (s < 0) {
      s += (std::int64_t(1) << 32);
      borrow = 1;
    }
    r.push_back(static_cast<std::uint32_t>(s));
  }
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  if (negative_ == o.negative_) {
    r.limbs_ = add_mag(limbs_, o.limbs_);
    r.negative_ = negative_;
  } else {
    int c = cmp_mag(*this, o);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.limbs_ = sub_mag(limbs_, o.limbs_);
      r.negative_ = negative_;
    } else {
      r.limbs_ = sub_mag(o.limbs_, limbs_);
      r.negative_ = o.negative_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (is_zero() || o.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + o.limbs_.size();
    while (carry) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.negative_ = negative_ != o.negative_;
  r.trim();
  return r;
}

// Binary long division on magnitudes; plenty fast at these sizes.
void BigInt::divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  q = BigInt();
  r = BigInt();
  if (cmp_mag(a, b) < 0) {
    r = a;
    r.negative_ = false;
    return;
  }
  std::size_t bits = a.limbs_.size() * 32;
  q.limbs_.assign(a.limbs_.size(), 0);
  for (std::size_t i = bits; i-- > 0;) {
    // r = (r << 1) | bit_i(a)
    std::uint32_t carry = 0;
    for (std::size_t j = 0; j < r.limbs_.size(); ++j) {
      std::uint32_t nc = r.limbs_[j] >> 31;
      r.limbs_[j] = (r.limbs_[j] << 1) | carry;
      carry = nc;
    }
    if (carry) r.limbs_.push_back(carry);
    std::uint32_t bit = (a.limbs_[i / 32] >> (i % 32)) & 1u;
    if (bit) {
      if (r.limbs_.empty()) r.limbs_.push_back(1);
      else r.limbs_[0] |= 1u;
    }
    BigInt babs = b;
    babs.negative_ = false;
    if (cmp_mag(r, babs) >= 0) {
      r.limbs_ = sub_mag(r.limbs_, babs.limbs_);
      r.trim();
      q.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  q.trim();
  r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod_mag(*this, o, q, r);
  q.negative_ = !q.limbs_.empty() && (negative_ != o.negative_);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod_mag(*this, o, q, r);
  r.negative_ = !r.limbs_.empty() && negative_;
  return r;
}

bool BigInt::operator==(const BigInt& o) const {
  return negative_ == o.negative_ && limbs_ == o.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (sign() != o.sign()) return sign() <=> o.sign();
  int c = cmp_mag(*this, o);
  if (negative_) c = -c;
  return c <=> 0;
}

bool BigInt::fits_u64() const { return limbs_.size() <= 2; }

std::uint64_t BigInt::to_u64() const {
  if (!fits_u64() || negative_) throw std::overflow_error("BigInt: does not fit u64");
  std::uint64_t v = 0;
  if (limbs_.size() > 0) v = limbs_[0];
  if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return v;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt t = *this;
  t.negative_ = false;
  std::string digits;
  const BigInt ten(10);
  while (!t.is_zero()) {
    BigInt q, r;
    divmod_mag(t, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.limbs_.empty() ? 0 : r.limbs_[0])));
    t = q;
  }
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::factorial(unsigned n) {
  BigInt r(1);
  for (unsigned i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

BigInt BigInt::pow2(unsigned n) {
  BigInt r(1);
  for (unsigned i = 0; i < n; ++i) r *= BigInt(2);
  return r;
}

// -------------------------------------------------------------- Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
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
  num_ = num_ / g;
  den_ = den_ / g;
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator==(const Rational& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return (num_ * o.den_) <=> (o.num_ * den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

// ----------------------------------------------------------- ExactScalar

ExactScalar ExactScalar::operator-() const { return ExactScalar(-a_, -b_); }

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  return ExactScalar(a_ + o.a_, b_ + o.b_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
  return ExactScalar(a_ - o.a_, b_ - o.b_);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  // (a + b*s5)(c + d*s5) = (ac + 5bd) + (ad + bc)*s5
  const Rational five(5);
  return ExactScalar(a_ * o.a_ + five * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  // multiply by the conjugate; the field norm a^2 - 5 b^2 vanishes only at 0
  const Rational five(5);
  Rational norm = o.a_ * o.a_ - five * o.b_ * o.b_;
  ExactScalar conj(o.a_, -o.b_);
  ExactScalar t = *this * conj;
  return ExactScalar(t.a_ / norm, t.b_ / norm);
}

bool ExactScalar::operator==(const ExactScalar& o) const {
  return a_ == o.a_ && b_ == o.b_;
}

std::string ExactScalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string s;
  if (!a_.is_zero()) s = a_.to_string();
  if (b_ == Rational(1)) s += s.empty() ? "r5" : "+r5";
  else if (b_ == Rational(-1)) s += "-r5";
  else {
    std::string bs = b_.to_string();
    if (!s.empty() && bs[0] != '-') s += "+";
    s += bs + "*r5";
  }
  return s;
}

}  // namespace beauville

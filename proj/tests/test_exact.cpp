#include <doctest.h>

#include <random>

#include "beauville/matrix.hpp"
#include "beauville/paperdata.hpp"

using namespace beauville;

namespace {

Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

ExactScalar sc(std::int64_t an, std::int64_t ad, std::int64_t bn = 0, std::int64_t bd = 1) {
  return ExactScalar(rat(an, ad), rat(bn, bd));
}

ExactScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-6, 6), den(1, 4);
  return sc(num(rng), den(rng), num(rng), den(rng));
}

}  // namespace

TEST_CASE("bigint arithmetic and factorials") {
  CHECK(BigInt::factorial(12).to_string() == "479001600");
  CHECK((BigInt::pow2(30) * BigInt::factorial(30)).to_string() ==
        "284813089515958324736640819941867520000000");
  BigInt a = BigInt::from_string("-123456789012345678901234567890");
  CHECK(a.to_string() == "-123456789012345678901234567890");
  CHECK((a / BigInt(1000)).to_string() == "-123456789012345678901234567");
  CHECK((a % BigInt(1000)) == BigInt(-890));
  CHECK(BigInt::gcd(BigInt::factorial(10), BigInt::pow2(20)) == BigInt(256));
  CHECK(BigInt(-5) < BigInt(3));
  CHECK(BigInt(0).is_zero());
}

TEST_CASE("scalar arithmetic in Q(sqrt5)") {
  // conjugate product: (1 + r5)(1 - r5) = -4
  CHECK(sc(1, 1, 1, 1) * sc(1, 1, -1, 1) == sc(-4, 1));
  // r5 * r5 = 5
  CHECK(ExactScalar::sqrt5() * ExactScalar::sqrt5() == sc(5, 1));
  // (-1/4 + (1/4) r5)^2 = 3/8 - (1/8) r5
  ExactScalar s = sc(-1, 4, 1, 4);
  CHECK(s * s == sc(3, 8, -1, 8));
  CHECK_THROWS_AS(s / ExactScalar(), std::domain_error);
}

TEST_CASE("scalar field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    ExactScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + (-a) == ExactScalar());
    if (!a.is_zero()) CHECK(a / a == ExactScalar(1));
  }
}

TEST_CASE("matrix basics: identity, inverse, trace") {
  ExactMatrix i3 = ExactMatrix::identity(3);
  CHECK(i3 * i3 == i3);
  CHECK(i3.trace() == ExactScalar(3));
  CHECK(ExactMatrix::identity(6).trace() == ExactScalar(6));
  CHECK(i3.inverse() == i3);
  CHECK(i3.is_diagonal());

  // singular matrix rejected
  ExactMatrix z(2);
  z.set(0, 0, ExactScalar(1));
  CHECK_THROWS_AS(z.inverse(), std::domain_error);
}

TEST_CASE("H4 simple reflections are involutions with the right bonds") {
  auto s = h4_simple_reflections();
  for (const auto& m : s) CHECK((m * m).is_identity());
  CHECK((s[2] * s[3]).order(64).value() == 5);
  CHECK((s[1] * s[2]).order(64).value() == 3);
  CHECK((s[0] * s[3]).order(64).value() == 2);
}

TEST_CASE("char_poly closed forms") {
  // identity 2x2: (l - 1)^2 = l^2 - 2l + 1
  auto cp = ExactMatrix::identity(2).char_poly();
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == ExactScalar(1));
  CHECK(cp[1] == ExactScalar(-2));
  CHECK(cp[2] == ExactScalar(1));

  // -I7: (l + 1)^7, binomial coefficients
  ExactMatrix m(7);
  for (int i = 0; i < 7; ++i) m.set(i, i, ExactScalar(-1));
  auto cp7 = m.char_poly();
  std::int64_t binom[8] = {1, 7, 21, 35, 35, 21, 7, 1};
  for (int k = 0; k <= 7; ++k) CHECK(cp7[k] == ExactScalar(binom[k]));

  // permutation matrix of cycle type (3,1): (l^3 - 1)(l - 1)
  SignedPermutation p = parse_signed("(1,2,3)", 4);
  auto cp4 = p.to_matrix().char_poly();
  std::int64_t want[5] = {1, -1, 0, -1, 1};  // l^4 - l^3 - l + 1
  for (int k = 0; k <= 4; ++k) CHECK(cp4[k] == ExactScalar(want[k]));
}

TEST_CASE("Cayley-Hamilton on random signed permutation matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint32_t> img(5);
    for (std::uint32_t i = 0; i < 5; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<std::uint8_t> sg(5);
    for (auto& b : sg) b = rng() & 1;
    ExactMatrix m = SignedPermutation(Permutation(img), sg).to_matrix();
    auto cp = m.char_poly();
    ExactMatrix acc(5);  // Horner evaluation of cp at m
    for (const auto& c : cp) {
      acc = acc * m;
      for (int i = 0; i < 5; ++i) acc.set(i, i, acc.at(i, i) + c);
    }
    bool zero = true;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) zero = zero && acc.at(i, j).is_zero();
    CHECK(zero);
  }
}

TEST_CASE("trace and char_poly are conjugation invariant") {
  std::mt19937_64 rng(13);
  SignedPermutation m = parse_signed("(1,_2,3)(_5)", 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint32_t> img(5);
    for (std::uint32_t i = 0; i < 5; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<std::uint8_t> sg(5);
    for (auto& b : sg) b = rng() & 1;
    ExactMatrix p = SignedPermutation(Permutation(img), sg).to_matrix();
    ExactMatrix conj = p.inverse() * m.to_matrix() * p;
    CHECK(conj.trace() == m.to_matrix().trace());
    CHECK(conj.char_poly() == m.to_matrix().char_poly());
  }
}

TEST_CASE("matrix literal JSON round-trips bit-exactly") {
  auto s = h4_simple_reflections();
  for (const auto& m : s) {
    std::string text = matrix_to_json_text(m);
    CHECK(matrix_from_json_text(text) == m);
  }
  std::string text = matrix_to_json_text(s[3]);
  CHECK(matrix_to_json_text(matrix_from_json_text(text)) == text);
}

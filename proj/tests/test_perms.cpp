#include <doctest.h>

#include <random>

#include "beauville/element.hpp"

using namespace beauville;

namespace {

SignedPermutation random_signed(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<std::uint8_t> sg(n);
  for (auto& b : sg) b = rng() & 1;
  return SignedPermutation(Permutation(std::move(img)), std::move(sg));
}

}  // namespace

TEST_CASE("notation parses to the displayed monomial matrix") {
  SignedPermutation p = parse_signed("(1,_2,3)(_5)", 5);
  ExactMatrix m = p.to_matrix();
  // one nonzero entry per row and column; -1 exactly at (3,2) and (5,5)
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const ExactScalar& e = m.at(i, j);
      bool is_minus = (i == 2 && j == 1) || (i == 4 && j == 4);
      bool is_plus = (i == 1 && j == 0) || (i == 0 && j == 2) || (i == 3 && j == 3);
      if (is_minus) CHECK(e == ExactScalar(-1));
      else if (is_plus) CHECK(e == ExactScalar(1));
      else CHECK(e.is_zero());
    }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_signed("(1,2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_signed("(1,7)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_signed("(1,2)(2,3)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_signed("(1,x)", 4), std::invalid_argument);
}

TEST_CASE("empty expression is the identity; round-trip on the display example") {
  CHECK(parse_signed("", 4).is_identity());
  CHECK(format_signed(SignedPermutation(6)) == "");
  SignedPermutation p = parse_signed("(1,_2,3)(_5)", 5);
  CHECK(parse_signed(format_signed(p), 5) == p);
  CHECK(format_signed(p) == "(1,_2,3)(_5)");
}

TEST_CASE("format/parse round-trip on random signed permutations") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    SignedPermutation p = random_signed(rng, 9);
    CHECK(parse_signed(format_signed(p), 9) == p);
  }
}

TEST_CASE("sign parity predicate is closed under products and inverses") {
  SignedPermutation a = parse_signed("(1,2)(_3)(_4)", 4);
  CHECK(a.even_signs());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    SignedPermutation p = random_signed(rng, 6), q = random_signed(rng, 6);
    if (p.even_signs() && q.even_signs()) {
      CHECK((p * q).even_signs());
      CHECK(p.inverse().even_signs());
    }
    // parity multiplicativity into {+-1}
    int sp = p.sign_count() % 2 ? -1 : 1, sq = q.sign_count() % 2 ? -1 : 1;
    int spq = (p * q).sign_count() % 2 ? -1 : 1;
    CHECK(spq == sp * sq);
  }
}

TEST_CASE("product matches monomial matrix arithmetic (anti in the written order)") {
  // composition applies the left factor first, so the matrix of p*q is
  // M(q) M(p); validated here and relied on everywhere
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    SignedPermutation p = random_signed(rng, 5), q = random_signed(rng, 5);
    CHECK((p * q).to_matrix() == q.to_matrix() * p.to_matrix());
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.to_matrix() * p.inverse().to_matrix() == ExactMatrix::identity(5));
  }
}

TEST_CASE("exhaustive product/matrix agreement at degree 3") {
  std::vector<SignedPermutation> all;
  std::vector<std::uint32_t> base{0, 1, 2};
  std::vector<std::uint32_t> img = base;
  std::sort(img.begin(), img.end());
  do {
    for (std::uint8_t mask = 0; mask < 8; ++mask)
      all.push_back(SignedPermutation(
          Permutation(img), {static_cast<std::uint8_t>(mask & 1),
                             static_cast<std::uint8_t>((mask >> 1) & 1),
                             static_cast<std::uint8_t>((mask >> 2) & 1)}));
  } while (std::next_permutation(img.begin(), img.end()));
  REQUIRE(all.size() == 48);
  for (const auto& p : all)
    for (const auto& q : all) CHECK((p * q).to_matrix() == q.to_matrix() * p.to_matrix());
}

TEST_CASE("orders: signed cycles double, matrices agree") {
  // x1 of the even B-family at n = 12 has order 22
  SignedPermutation x1 = parse_signed("(1,2,3,4,5,6,7,8,9,10,11)(_12)", 12);
  CHECK(x1.order() == 22);
  // involutions built from disjoint transpositions
  CHECK(parse_signed("(1,2)(3,11)(4,10)(5,9)(6,8)", 12).order() == 2);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    SignedPermutation p = random_signed(rng, 6);
    CHECK(p.order() == p.to_matrix().order(256).value());
    CHECK(p.pow(p.order()).is_identity());
  }
}

TEST_CASE("the even-family 5-cycle identity at n = 12") {
  SignedPermutation x1 = parse_signed("(1,2,3,4,5,6,7,8,9,10,11)(_12)", 12);
  SignedPermutation y1 = parse_signed("(12,11,10,9,8,7,6,5,4,3)", 12);
  SignedPermutation z = x1 * x1 * y1 * y1;
  CHECK(format_signed(z) == "(1,11,2,12,10)");
  CHECK(z.sign_count() == 0);
}

TEST_CASE("signed cycle type") {
  CHECK(SignedPermutation(3).cycle_type() ==
        std::vector<std::pair<std::uint32_t, std::int8_t>>{{1, 1}, {1, 1}, {1, 1}});
  auto t = parse_signed("(1,_2,3)(_5)", 5).cycle_type();
  CHECK(t == std::vector<std::pair<std::uint32_t, std::int8_t>>{{1, -1}, {1, 1}, {3, -1}});
  // conjugation invariance
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    SignedPermutation p = random_signed(rng, 7), c = random_signed(rng, 7);
    CHECK((c.inverse() * p * c).cycle_type() == p.cycle_type());
  }
}

TEST_CASE("trace without building the matrix") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    SignedPermutation p = random_signed(rng, 8);
    CHECK(ExactScalar(p.trace()) == p.to_matrix().trace());
  }
}

TEST_CASE("dihedral elements") {
  DihedralElement r{7, 1, false}, f{7, 0, true};
  CHECK(r.order() == 7);
  CHECK(f.order() == 2);
  CHECK((f * f).is_identity());
  CHECK((r * r.inverse()).is_identity());
  // two reflections compose to a rotation
  DihedralElement f1{7, 1, true};
  CHECK(!(f * f1).flip);
  CHECK((f * f1).order() == 7);
}

TEST_CASE("element variant obeys group laws across carriers") {
  Element a(parse_signed("(1,2,3)", 4));
  CHECK(a.pow(3).is_identity());
  CHECK(a.order() == 3);
  Element d(DihedralElement{5, 2, true});
  CHECK(d.order() == 2);
  Element pr = Element::pair(a, d);
  CHECK(pr.order() == 6);
  CHECK((pr * pr.inverse()).is_identity());
  CHECK_THROWS_AS(a * d, std::invalid_argument);
}
